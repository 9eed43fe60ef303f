#include "liyorke/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "liyorke/orbit.hpp"
#include "liyorke/parallel.hpp"

namespace liyorke {

AnalysisConfig AnalysisConfig::with_horizon(std::int64_t n, std::int64_t pairs,
                                            std::uint64_t seed) {
  AnalysisConfig cfg;
  cfg.horizon = n;
  cfg.burn_in = n / 2;
  cfg.pair_count = pairs;
  cfg.seed = seed;
  return cfg;
}

void AnalysisConfig::validate() const {
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  if (burn_in < 0 || burn_in >= horizon)
    throw std::invalid_argument("burn-in must lie in [0, horizon)");
  if (!(eps_prox > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(delta_sep > eps_prox) || !(delta_sep <= 1.0))
    throw std::invalid_argument("need eps < delta <= 1");
  if (pair_count < 1) throw std::invalid_argument("pair count must be >= 1");
}

std::vector<double> orbit_distances(const System& sys, const Metric& metric,
                                    Point p, Point q, std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  OrbitWalker wp(sys, p), wq(sys, q);
  std::vector<double> out;
  out.reserve(horizon);
  for (std::uint64_t n = 0; n < horizon; ++n) {
    out.push_back(metric.eval(wp.current(), wq.current(), sys));
    wp.step();
    wq.step();
  }
  return out;
}

PairStats pair_stats(const System& sys, const Metric& metric, Point p, Point q,
                     const AnalysisConfig& cfg) {
  cfg.validate();
  OrbitWalker wp(sys, p), wq(sys, q);
  PairStats stats;
  if (cfg.keep_trajectory) stats.dists.reserve(std::size_t(cfg.horizon));
  for (std::int64_t n = 0; n < cfg.horizon; ++n) {
    if (n >= cfg.burn_in || cfg.keep_trajectory) {
      double d = metric.eval(wp.current(), wq.current(), sys);
      if (cfg.keep_trajectory) stats.dists.push_back(d);
      if (n >= cfg.burn_in) {
        if (d < stats.tail_min) stats.tail_min = d;
        if (d > stats.tail_max) stats.tail_max = d;
      }
    }
    wp.step();
    wq.step();
  }
  return stats;
}

LiYorkeVerdict classify(const PairStats& stats, const AnalysisConfig& cfg) {
  LiYorkeVerdict v;
  v.proximal = stats.tail_min <= cfg.eps_prox;
  v.separated = stats.tail_max >= cfg.delta_sep;
  v.li_yorke = v.proximal && v.separated;
  return v;
}

Estimate li_yorke_density(const System& sys, const Metric& metric,
                          const AnalysisConfig& cfg, int threads) {
  cfg.validate();
  const std::int64_t m = cfg.pair_count;
  std::vector<char> flags(std::size_t(m), 0);
  parallel_for(m, threads, [&](std::int64_t i) {
    RngStream rng(cfg.seed, stream_id(stream_tag::kDensity, std::uint64_t(i)));
    Point p = sample_point(sys, rng);
    Point q = sample_point(sys, rng);
    flags[std::size_t(i)] = classify(pair_stats(sys, metric, p, q, cfg), cfg).li_yorke;
  });
  std::int64_t hits = 0;
  for (char f : flags) hits += f;
  Estimate est;
  est.value = double(hits) / double(m);
  est.half_width = 1.96 * std::sqrt(est.value * (1.0 - est.value) / double(m));
  return est;
}

double sensitivity_profile(const System& sys, const Metric& metric, Point x,
                           const AnalysisConfig& cfg, int threads) {
  cfg.validate();
  const std::int64_t m = cfg.pair_count;
  std::vector<char> flags(std::size_t(m), 0);
  parallel_for(m, threads, [&](std::int64_t i) {
    RngStream rng(cfg.seed, stream_id(stream_tag::kSensitivity, std::uint64_t(i)));
    Point y = sample_point(sys, rng);
    flags[std::size_t(i)] = classify(pair_stats(sys, metric, x, y, cfg), cfg).separated;
  });
  std::int64_t hits = 0;
  for (char f : flags) hits += f;
  return double(hits) / double(m);
}

double CoverageReport::mean_fraction_upto(double rmax) const {
  std::size_t count = 0;
  for (double r : grid)
    if (r <= rmax + 1e-12) ++count;
  if (count == 0 || per_pair.empty()) return 0.0;
  double total = 0.0;
  for (const auto& row : per_pair) {
    std::size_t covered = 0;
    for (std::size_t g = 0; g < count; ++g) covered += std::size_t(row[g] != 0);
    total += double(covered) / double(count);
  }
  return total / double(per_pair.size());
}

CoverageReport distance_coverage(const System& sys, const Metric& metric,
                                 const AnalysisConfig& cfg, double grid_step,
                                 double tol, int threads) {
  cfg.validate();
  if (!(grid_step > 0.0) || !(tol > 0.0))
    throw std::invalid_argument("grid step and tolerance must be positive");
  CoverageReport report;
  report.grid_step = grid_step;
  report.tol = tol;
  for (double r = 0.0; r <= 1.0 + 1e-12; r += grid_step)
    report.grid.push_back(r);
  const std::size_t g = report.grid.size();
  const std::int64_t m = cfg.pair_count;
  report.pairs = m;
  report.per_pair.assign(std::size_t(m), std::vector<char>(g, 0));

  parallel_for(m, threads, [&](std::int64_t i) {
    RngStream rng(cfg.seed, stream_id(stream_tag::kCoverage, std::uint64_t(i)));
    Point p = sample_point(sys, rng);
    Point q = sample_point(sys, rng);
    auto& row = report.per_pair[std::size_t(i)];
    OrbitWalker wp(sys, p), wq(sys, q);
    for (std::int64_t n = 0; n < cfg.horizon; ++n) {
      if (n >= cfg.burn_in) {
        double d = metric.eval(wp.current(), wq.current(), sys);
        auto lo = std::int64_t(std::ceil((d - tol) / grid_step - 1e-12));
        auto hi = std::int64_t(std::floor((d + tol) / grid_step + 1e-12));
        if (lo < 0) lo = 0;
        if (hi >= std::int64_t(g)) hi = std::int64_t(g) - 1;
        for (std::int64_t gi = lo; gi <= hi; ++gi) row[std::size_t(gi)] = 1;
      }
      wp.step();
      wq.step();
    }
  });

  report.attained.assign(g, 0.0);
  double mean = 0.0;
  for (const auto& row : report.per_pair) {
    std::size_t covered = 0;
    for (std::size_t gi = 0; gi < g; ++gi) {
      if (row[gi]) {
        report.attained[gi] += 1.0;
        ++covered;
      }
    }
    mean += double(covered) / double(g);
  }
  for (double& a : report.attained) a /= double(m);
  report.mean_fraction = mean / double(m);
  return report;
}

ScrambledResult greedy_scrambled_set(const System& sys, const Metric& metric,
                                     const AnalysisConfig& cfg, int target,
                                     std::int64_t budget) {
  cfg.validate();
  if (target < 2) throw std::invalid_argument("scrambled target must be >= 2");
  ScrambledResult res;
  RngStream rng(cfg.seed, stream_id(stream_tag::kScrambled, 0));
  for (std::int64_t c = 0; c < budget && int(res.members.size()) < target; ++c) {
    ++res.candidates_used;
    Point cand = sample_point(sys, rng);
    bool ok = true;
    for (const Point& member : res.members) {
      if (!classify(pair_stats(sys, metric, member, cand, cfg), cfg).li_yorke) {
        ok = false;
        break;
      }
    }
    if (ok) res.members.push_back(cand);
  }
  res.reached_target = int(res.members.size()) >= target;
  return res;
}

}  // namespace liyorke
