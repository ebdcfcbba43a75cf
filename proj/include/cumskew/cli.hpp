#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cumskew/error.hpp"
#include "cumskew/experiments.hpp"
#include "cumskew/io.hpp"
#include "cumskew/lorenz.hpp"
#include "cumskew/random.hpp"
#include "cumskew/skew.hpp"

namespace cumskew::cli {

enum class OutputFormat { Text, Csv, Json };

enum ExitCode : int {
  kExitOk = 0,
  kExitIngestion = 2,
  kExitConfig = 3,
  kExitInternal = 4,
};

inline int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::FileNotFound:
    case ErrorCode::ColumnNotFound:
    case ErrorCode::ParseError:
    case ErrorCode::EmptyOrTooSmall:
    case ErrorCode::NonFiniteValue:
    case ErrorCode::ConstantSample:
      return kExitIngestion;
    case ErrorCode::InvalidParameter:
    case ErrorCode::CountTooLarge:
      return kExitConfig;
  }
  return kExitInternal;
}

inline OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "text") return OutputFormat::Text;
  throw Error(ErrorCode::InvalidParameter, "unknown format '" + s + "'");
}

struct RunConfig {
  std::string input_path;
  std::optional<std::string> column;
  std::string experiment;
  std::uint64_t seed = 42;
  std::optional<std::size_t> reps;
  std::optional<std::size_t> n;
  std::optional<double> sigma;
  std::optional<std::string> out_path;
  std::optional<std::string> svg_path;
  OutputFormat format = OutputFormat::Text;
  unsigned threads = 0;
};

inline nlohmann::ordered_json run_metadata() {
  nlohmann::ordered_json m;
  m["b1_variant"] = "population";
  m["cs_shift"] = "canonical_mean_one";
  m["rng_engine"] = std::string(kEngineName);
  m["normal_method"] = std::string(kNormalMethod);
  m["stream_id"] = "mix64(fnv1a64(id) ^ mix64(rep))";
  const auto hi = ContaminationSpec::high(1);
  const auto lo = ContaminationSpec::low(1);
  m["outliers_high_multiple"] = {hi.lo, hi.hi};
  m["outliers_low_multiple"] = {lo.lo, lo.hi};
  m["outlier_scale"] = "max_abs_clean_sample";
  return m;
}

// ---- compute ----

inline void write_report(std::ostream& os, const SkewReport& r, OutputFormat fmt,
                         LorenzBase base) {
  switch (fmt) {
    case OutputFormat::Text:
      os << "n:          " << r.n << '\n'
         << "cs:         " << io::format_g6(r.cs) << '\n'
         << "b1:         " << io::format_g6(r.b1) << '\n'
         << "gini:       " << io::format_g6(r.gini) << '\n'
         << "cs_bound:   " << io::format_g6(r.cs_bound()) << '\n'
         << "degenerate: " << (r.degenerate ? "true" : "false") << '\n';
      break;
    case OutputFormat::Csv:
      os << "n,cs,b1,gini,cs_bound,degenerate\n"
         << r.n << ',' << io::format_shortest(r.cs) << ','
         << io::format_shortest(r.b1) << ',' << io::format_shortest(r.gini) << ','
         << io::format_shortest(r.cs_bound()) << ','
         << (r.degenerate ? "true" : "false") << '\n';
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["n"] = r.n;
      j["cs"] = r.cs;
      j["b1"] = r.b1;
      j["gini"] = r.gini;
      j["cs_bound"] = r.cs_bound();
      j["degenerate"] = r.degenerate;
      j["metadata"] = {
          {"b1_variant", "population"},
          {"cs_shift", "canonical_mean_one"},
          {"lorenz_base", base == LorenzBase::Raw ? "raw" : "canonical_mean_one"}};
      os << j.dump(2) << '\n';
      break;
    }
  }
}

inline void cmd_compute(const RunConfig& cfg, std::ostream& os) {
  const Sample s = io::parse_csv(cfg.input_path, cfg.column);
  const SkewReport r = skew_report(s);
  const LorenzBase base = lorenz_grid(s).base;
  if (cfg.out_path) {
    std::ofstream f(*cfg.out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write '" + *cfg.out_path + "'");
    write_report(f, r, cfg.format, base);
  } else {
    write_report(os, r, cfg.format, base);
  }
}

// ---- lorenz ----

inline void cmd_lorenz(const RunConfig& cfg, std::ostream& os) {
  const Sample s = io::parse_csv(cfg.input_path, cfg.column);
  const LorenzGrid grid = lorenz_grid(s);
  const WeightVector w = weight_vector(s.size());
  io::write_lorenz_tsv(os, grid, w);
  if (cfg.svg_path) {
    std::ofstream f(*cfg.svg_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write '" + *cfg.svg_path + "'");
    io::write_lorenz_svg(f, grid, w);
  }
}

// ---- experiment ----

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"table1", "null-normal",
                                                 "null-cauchy", "gcurve"};
  return names;
}

inline void write_condition_rows(std::ostream& os, const std::string& name,
                                 const std::vector<ConditionResult>& rows,
                                 OutputFormat fmt, std::uint64_t seed) {
  auto sigma_text = [](const ConditionResult& r) -> std::string {
    if (r.distribution.kind == DistributionKind::Cauchy) return "";
    return io::format_shortest(r.distribution.sd);
  };
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["experiment"] = name;
    doc["seed"] = seed;
    doc["metadata"] = run_metadata();
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["id"] = r.id;
      if (r.distribution.kind == DistributionKind::Cauchy) {
        j["sigma"] = nullptr;
      } else {
        j["sigma"] = r.distribution.sd;
      }
      j["contamination"] = r.contamination;
      j["n"] = r.n;
      j["reps"] = r.reps;
      j["seed"] = r.seed;
      j["b1_ave"] = r.b1_ave;
      j["b1_se"] = r.b1_se;
      j["cs_ave"] = r.cs_ave;
      j["cs_se"] = r.cs_se;
      j["degenerate_count"] = r.degenerate_count;
      doc["rows"].push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
    return;
  }
  os << "id,sigma,contamination,n,reps,seed,b1_ave,b1_se,cs_ave,cs_se,degenerate_count\n";
  for (const auto& r : rows) {
    os << r.id << ',' << sigma_text(r) << ',' << r.contamination << ',' << r.n << ','
       << r.reps << ',' << r.seed << ',' << io::format_shortest(r.b1_ave) << ','
       << io::format_shortest(r.b1_se) << ',' << io::format_shortest(r.cs_ave) << ','
       << io::format_shortest(r.cs_se) << ',' << r.degenerate_count << '\n';
  }
}

inline void write_gcurve_rows(std::ostream& os, const std::vector<GCurvePoint>& pts,
                              OutputFormat fmt, std::uint64_t seed) {
  if (fmt == OutputFormat::Json) {
    nlohmann::ordered_json doc;
    doc["experiment"] = "gcurve";
    doc["seed"] = seed;
    auto meta = run_metadata();
    meta["underlying_mean"] = 0.0;
    doc["metadata"] = meta;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& p : pts) {
      nlohmann::ordered_json j;
      j["g"] = p.g;
      j["sd"] = p.sd;
      j["n"] = p.n;
      j["seed"] = p.seed;
      j["cs"] = p.cs;
      doc["rows"].push_back(std::move(j));
    }
    os << doc.dump(2) << '\n';
    return;
  }
  os << "g,sd,n,seed,cs\n";
  for (const auto& p : pts) {
    os << io::format_shortest(p.g) << ',' << io::format_shortest(p.sd) << ',' << p.n
       << ',' << p.seed << ',' << io::format_shortest(p.cs) << '\n';
  }
}

// Runs the named experiment and writes its table. Text format is treated as
// CSV here.
inline void run_experiment(const RunConfig& cfg, std::ostream& os) {
  const RunOptions opts{cfg.threads};
  const OutputFormat fmt =
      cfg.format == OutputFormat::Json ? OutputFormat::Json : OutputFormat::Csv;
  auto reject = [&](bool present, const char* flag) {
    if (present) {
      throw Error(ErrorCode::InvalidParameter,
                  std::string(flag) + " is not valid for experiment '" + cfg.experiment + "'");
    }
  };

  if (cfg.experiment == "table1") {
    reject(cfg.sigma.has_value(), "--sigma");
    const auto specs = table1_conditions(cfg.n.value_or(kTable1N), cfg.reps.value_or(kTable1Reps));
    write_condition_rows(os, cfg.experiment, run_conditions(specs, cfg.seed, opts), fmt, cfg.seed);
  } else if (cfg.experiment == "null-normal") {
    const auto dist = DistributionSpec::normal(0.0, cfg.sigma.value_or(1.0));
    const auto r = run_null(dist, cfg.n.value_or(100), cfg.reps.value_or(100000), cfg.seed, opts);
    write_condition_rows(os, cfg.experiment, {r}, fmt, cfg.seed);
  } else if (cfg.experiment == "null-cauchy") {
    reject(cfg.sigma.has_value(), "--sigma");
    const auto r = run_null(DistributionSpec::cauchy(), cfg.n.value_or(100),
                            cfg.reps.value_or(100000), cfg.seed, opts);
    write_condition_rows(os, cfg.experiment, {r}, fmt, cfg.seed);
  } else if (cfg.experiment == "gcurve") {
    reject(cfg.reps.has_value(), "--reps");
    const auto grid = default_g_grid();
    std::vector<double> sds = {1.0, 3.0};
    if (cfg.sigma) sds = {*cfg.sigma};
    const auto pts = run_gcurve(grid, sds, cfg.n.value_or(kGCurveN), cfg.seed, opts);
    write_gcurve_rows(os, pts, fmt, cfg.seed);
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown experiment '" + cfg.experiment + "'");
  }
}

inline void cmd_experiment(const RunConfig& cfg, std::ostream& os) {
  if (!cfg.out_path) {
    run_experiment(cfg, os);
    return;
  }
  std::ostringstream buf;
  run_experiment(cfg, buf);
  std::ofstream f(*cfg.out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidParameter, "cannot write '" + *cfg.out_path + "'");
  f << buf.str();
}

}  // namespace cumskew::cli
