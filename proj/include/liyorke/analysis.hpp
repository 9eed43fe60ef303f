#pragma once

#include <cstdint>
#include <vector>

#include "liyorke/metric.hpp"
#include "liyorke/point.hpp"
#include "liyorke/system.hpp"

namespace liyorke {

struct AnalysisConfig {
  std::int64_t horizon = 10000;   // N
  std::int64_t burn_in = 5000;    // N0, tail statistics taken over [N0, N)
  double eps_prox = 0.01;         // proximality threshold
  double delta_sep = 0.1;         // separation threshold
  std::int64_t pair_count = 1000; // M
  std::uint64_t seed = 0;
  bool keep_trajectory = false;

  static AnalysisConfig with_horizon(std::int64_t n, std::int64_t pairs,
                                     std::uint64_t seed);
  void validate() const;  // throws std::invalid_argument
};

struct PairStats {
  double tail_min = 1.0;
  double tail_max = 0.0;
  std::vector<double> dists;  // full trajectory when requested
};

struct LiYorkeVerdict {
  bool proximal = false;
  bool separated = false;
  bool li_yorke = false;
};

struct Estimate {
  double value = 0.0;
  double half_width = 0.0;  // 1.96 * sqrt(f(1-f)/M)
};

struct CoverageReport {
  double grid_step = 0.05;
  double tol = 0.01;
  std::vector<double> grid;
  // fraction of pairs that attained each grid value
  std::vector<double> attained;
  double mean_fraction = 0.0;  // mean per-pair fraction over the full grid
  std::int64_t pairs = 0;
  // mean per-pair fraction over grid values <= rmax
  double mean_fraction_upto(double rmax) const;
  std::vector<std::vector<char>> per_pair;  // pair x grid coverage flags
};

struct ScrambledResult {
  std::vector<Point> members;
  bool reached_target = false;
  std::int64_t candidates_used = 0;
};

PairStats pair_stats(const System& sys, const Metric& metric, Point p, Point q,
                     const AnalysisConfig& cfg);

LiYorkeVerdict classify(const PairStats& stats, const AnalysisConfig& cfg);

// Fraction of mu x mu pairs classified Li-Yorke, with a normal-approximation
// confidence half-width.
Estimate li_yorke_density(const System& sys, const Metric& metric,
                          const AnalysisConfig& cfg, int threads = 1);

// Fraction of sampled y with separated == true against a fixed x.
double sensitivity_profile(const System& sys, const Metric& metric, Point x,
                           const AnalysisConfig& cfg, int threads = 1);

CoverageReport distance_coverage(const System& sys, const Metric& metric,
                                 const AnalysisConfig& cfg, double grid_step,
                                 double tol, int threads = 1);

// Greedy witness for scrambled sets: accept a candidate iff it forms a
// Li-Yorke pair with every current member.
ScrambledResult greedy_scrambled_set(const System& sys, const Metric& metric,
                                     const AnalysisConfig& cfg, int target,
                                     std::int64_t budget);

}  // namespace liyorke
