// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cumskew/cli.hpp"
#include "cumskew/experiments.hpp"
#include "properties.hpp"

namespace {

using namespace cumskew;

constexpr std::uint64_t kSeed = 42;
constexpr double kMaxSeconds = 60.0;

int g_failures = 0;

void report(bool ok, const std::string& id, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << detail << '\n';
  if (!ok) ++g_failures;
}

std::string fmt(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

template <typename Fn>
double timed(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Target {
  double b1;
  double b1_rel;
  double cs;
  double cs_abs;
};

void table1_criteria(const RunOptions& opts) {
  std::vector<ConditionResult> rows;
  const double secs = timed([&] { rows = run_table1(kSeed, opts); });

  const Target targets[] = {
      {0.586, 0.03, 0.104, 0.010},
      {1.598, 0.03, 0.241, 0.010},
      {3.724, 0.05, 0.448, 0.015},
      {7.635, 0.10, 0.741, 0.015},
  };
  for (int i = 0; i < 4; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    const auto& t = targets[i];
    const bool b1_ok = std::fabs(r.b1_ave - t.b1) <= t.b1_rel * t.b1;
    const bool cs_ok = std::fabs(r.cs_ave - t.cs) <= t.cs_abs;
    report(b1_ok && cs_ok, "AC1." + std::to_string(i + 1) + " table1 " + r.id,
           "sigma=" + fmt(r.distribution.sd) + " b1_ave=" + fmt(r.b1_ave) + " (target " +
               fmt(t.b1) + " +-" + fmt(100 * t.b1_rel) + "%) cs_ave=" + fmt(r.cs_ave) +
               " (target " + fmt(t.cs) + " +-" + fmt(t.cs_abs) + ", off by " +
               fmt(std::fabs(r.cs_ave - t.cs), 3) + ")");
  }
  report(secs < kMaxSeconds, "AC1.t table1 runtime", fmt(secs, 3) + " s (limit 60 s)");

  const auto& c2 = rows[1];
  const auto& c5 = rows[4];
  const auto& c6 = rows[5];
  const double cs_rel = std::fabs(c5.cs_ave - c2.cs_ave) / std::fabs(c2.cs_ave);
  const double b1_rel = std::fabs(c5.b1_ave - c2.b1_ave) / std::fabs(c2.b1_ave);
  report(c5.b1_ave > c2.b1_ave && cs_rel < b1_rel, "AC2.1 high outliers (c5 vs c2)",
         "b1 " + fmt(c2.b1_ave) + " -> " + fmt(c5.b1_ave) + " (rel " + fmt(b1_rel, 3) +
             "), cs " + fmt(c2.cs_ave) + " -> " + fmt(c5.cs_ave) + " (rel " + fmt(cs_rel, 3) +
             ")");
  report(c6.b1_ave < 0.0 && c6.cs_ave > 0.0, "AC2.2 low outliers (c6 sign pattern)",
         "b1_ave=" + fmt(c6.b1_ave) + " (want < 0) cs_ave=" + fmt(c6.cs_ave) + " (want > 0)");
}

void null_criteria(const RunOptions& opts) {
  ConditionResult normal;
  const double secs =
      timed([&] { normal = run_null(DistributionSpec::normal(0, 1), 100, 100000, kSeed, opts); });
  report(normal.cs_ave >= -0.0014 && normal.cs_ave <= -0.0004,
         "AC3.1 normal null mean",
         "cs_ave=" + fmt(normal.cs_ave) + " (band [-0.0014, -0.0004]; " +
             fmt(normal.cs_ave / normal.cs_se, 3) + " SE from 0)");
  report(normal.cs_se >= 0.00012 && normal.cs_se <= 0.00016, "AC3.2 normal null SE",
         "cs_se=" + fmt(normal.cs_se) + " (band [0.00012, 0.00016])");
  report(secs < kMaxSeconds, "AC3.t normal null runtime", fmt(secs, 3) + " s (limit 60 s)");

  const auto cauchy = run_null(DistributionSpec::cauchy(), 100, 100000, kSeed, opts);
  report(cauchy.cs_ave >= -0.002 && cauchy.cs_ave <= 0.008, "AC4.1 cauchy null mean",
         "cs_ave=" + fmt(cauchy.cs_ave) + " (band [-0.002, 0.008])");
  report(cauchy.cs_se >= 0.0010 && cauchy.cs_se <= 0.0016, "AC4.2 cauchy null SE",
         "cs_se=" + fmt(cauchy.cs_se) + " (band [0.0010, 0.0016])");
}

void gcurve_criteria(const RunOptions& opts) {
  const auto grid = default_g_grid();
  const std::vector<double> sds = {1.0, 3.0};
  const auto pts = run_gcurve(grid, sds, kGCurveN, kSeed, opts);
  const std::size_t m = grid.size();
  for (std::size_t k = 0; k < sds.size(); ++k) {
    bool increasing = true;
    for (std::size_t j = 1; j < m; ++j) {
      increasing &= pts[k * m + j].cs > pts[k * m + j - 1].cs;
    }
    report(increasing, "AC5." + std::to_string(k + 1) + " gcurve SD=" + fmt(sds[k]) + " increasing",
           "cs(g=0.1)=" + fmt(pts[k * m].cs) + " .. cs(g=1.5)=" + fmt(pts[k * m + m - 1].cs));
  }
  bool dominates = true;
  double min_margin = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double margin = pts[m + j].cs - pts[j].cs;
    dominates &= margin > 0.0;
    min_margin = std::min(min_margin, margin);
  }
  report(dominates, "AC5.3 gcurve SD=3 dominates SD=1", "min margin " + fmt(min_margin));
}

void property_criteria() {
  constexpr std::size_t kCases = 1000;
  const props::Outcome outcomes[] = {
      props::scale_location_invariance(kCases), props::reflection_antisymmetry(kCases),
      props::mirrored_pairs_are_symmetric(kCases), props::finite_bound(kCases),
      props::single_outlier_attains_bound(kCases), props::tie_permutation_invariance(kCases),
      props::exact_rational_oracle(),
  };
  int i = 0;
  for (const auto& o : outcomes) {
    report(o.ok(), "AC6." + std::to_string(++i) + " " + o.name,
           std::to_string(o.cases) + " cases, " + std::to_string(o.failures) +
               " failures, worst error " + fmt(o.worst, 3));
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism_criterion() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cumskew_acceptance";
  fs::create_directories(dir);

  cli::RunConfig cfg;
  cfg.experiment = "table1";
  cfg.seed = kSeed;
  cfg.format = cli::OutputFormat::Csv;
  const unsigned wide = std::max(8u, std::thread::hardware_concurrency());

  cfg.threads = 1;
  cfg.out_path = (dir / "serial.csv").string();
  cli::cmd_experiment(cfg, std::cout);
  cfg.threads = wide;
  cfg.out_path = (dir / "parallel.csv").string();
  cli::cmd_experiment(cfg, std::cout);

  const std::string a = slurp(dir / "serial.csv");
  const std::string b = slurp(dir / "parallel.csv");
  report(!a.empty() && a == b, "AC7 table1 --seed 42 determinism",
         "serial vs " + std::to_string(wide) + " threads: " + std::to_string(a.size()) +
             " bytes, " + (a == b ? "identical" : "DIFFER"));
  fs::remove_all(dir);
}

}  // namespace

int main() {
  const RunOptions opts{0};
  std::cout << "cumulative skew acceptance suite (seed " << kSeed << ")\n";
  table1_criteria(opts);
  null_criteria(opts);
  gcurve_criteria(opts);
  property_criteria();
  determinism_criterion();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(g_failures) + " CRITERIA FAILED")
            << '\n';
  return g_failures == 0 ? 0 : 1;
}
