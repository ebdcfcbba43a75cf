// Command-line front end: compute, experiment, lorenz.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cumskew/cli.hpp"

namespace {

using cumskew::cli::OutputFormat;
using cumskew::cli::RunConfig;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cumulative skew: robust Lorenz-curve skewness, moment skewness and "
               "Monte Carlo experiments"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format;
  std::size_t reps = 0, n = 0;
  double sigma = 0.0;
  std::string column, out, svg;

  auto* compute = app.add_subcommand("compute", "Skewness report for one CSV column");
  compute->add_option("path", cfg.input_path, "CSV file")->required();
  compute->add_option("--column", column, "Header name or 0-based column index");
  compute->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  compute->add_option("--out", out, "Write to file instead of stdout");

  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment");
  experiment->add_option("name", cfg.experiment, "table1 | null-normal | null-cauchy | gcurve")
      ->required();
  experiment->add_option("--seed", cfg.seed, "Base seed");
  auto* reps_opt = experiment->add_option("--reps", reps, "Replications per condition")
                       ->check(CLI::PositiveNumber);
  auto* n_opt = experiment->add_option("--n", n, "Sample size")->check(CLI::Range(2, 1 << 30));
  auto* sigma_opt = experiment->add_option("--sigma", sigma, "Normal sd (null-normal) or SD (gcurve)")
                        ->check(CLI::PositiveNumber);
  experiment->add_option("--out", out, "Output path");
  experiment->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  experiment->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* lorenz = app.add_subcommand("lorenz", "Lorenz plot data (TSV) and optional SVG");
  lorenz->add_option("path", cfg.input_path, "CSV file")->required();
  lorenz->add_option("--column", column, "Header name or 0-based column index");
  lorenz->add_option("--svg", svg, "SVG output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cumskew::cli::kExitConfig;
  }

  try {
    if (!column.empty()) cfg.column = column;
    if (!out.empty()) cfg.out_path = out;
    if (!svg.empty()) cfg.svg_path = svg;
    if (reps_opt->count() > 0) cfg.reps = reps;
    if (n_opt->count() > 0) cfg.n = n;
    if (sigma_opt->count() > 0) cfg.sigma = sigma;

    if (compute->parsed()) {
      cfg.format = format.empty() ? OutputFormat::Text : cumskew::cli::parse_format(format);
      cumskew::cli::cmd_compute(cfg, std::cout);
    } else if (experiment->parsed()) {
      cfg.format = format.empty() ? OutputFormat::Csv : cumskew::cli::parse_format(format);
      cumskew::cli::cmd_experiment(cfg, std::cout);
    } else if (lorenz->parsed()) {
      cumskew::cli::cmd_lorenz(cfg, std::cout);
    }
  } catch (const cumskew::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cumskew::cli::exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return cumskew::cli::kExitInternal;
  }
  return cumskew::cli::kExitOk;
}
