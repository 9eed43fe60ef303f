#include "liyorke/harness.hpp"

#include <algorithm>
#include <cmath>

#include "liyorke/analysis.hpp"
#include "liyorke/catalog.hpp"
#include "liyorke/metric.hpp"
#include "liyorke/orbit.hpp"
#include "liyorke/rng.hpp"
#include "liyorke/spectral.hpp"
#include "liyorke/system.hpp"

namespace liyorke {

namespace {

struct ScaleParams {
  std::int64_t horizon;
  std::int64_t pairs;
  std::int64_t spectral_samples;
  std::int64_t obstruction_horizon;  // TC3, exact check
  std::int64_t obstruction_pairs;
  std::int64_t spillover_horizon;
  std::int64_t spillover_pairs;
  double density_thr;
  double profile_thr;
  double coverage_thr;
  double tc4_lo, tc4_hi;
  double spillover_thr;
};

ScaleParams params_for(Scale scale) {
  if (scale == Scale::Full)
    return {100000, 10000, 100000, 10000, 1000, 100000, 1000,
            0.99,   0.99,  0.95,   0.46,  0.54, 0.99};
  return {1000, 1000, 10000, 1000, 200, 1000, 300,
          0.97, 0.97, 0.90,  0.42, 0.58, 0.95};
}

std::uint64_t check_seed(std::uint64_t master, std::uint64_t index) {
  return RngStream(master, stream_id(stream_tag::kHarness, index)).next_u64();
}

Metric pick(const std::string& override_name, const System& sys,
            const Metric& fallback) {
  if (override_name.empty()) return fallback;
  return catalog_metric(override_name, sys);
}

void put(TheoremCheck& c, const std::string& k, double v) {
  c.evidence.emplace_back(k, v);
}

// TC1: ergodic Cartesian square forces both attained-distance coverage and
// full Li-Yorke density on the doubling map.
TheoremCheck tc1(const ScaleParams& sp, std::uint64_t seed,
                 const std::string& ovr, int threads) {
  TheoremCheck c{"TC1", "product-ergodic system is Li-Yorke dense", false, {}};
  System sys = System::doubling();
  Metric metric = pick(ovr, sys, Metric::circle_arc());

  auto cfg = AnalysisConfig::with_horizon(sp.horizon, sp.pairs, check_seed(seed, 1));
  Estimate density = li_yorke_density(sys, metric, cfg, threads);

  auto cov_cfg = AnalysisConfig::with_horizon(sp.horizon, 200, check_seed(seed, 101));
  CoverageReport cov = distance_coverage(sys, metric, cov_cfg, 0.05, 0.01, threads);
  double cov_half = cov.mean_fraction_upto(0.5);

  put(c, "density", density.value);
  put(c, "density_half_width", density.half_width);
  put(c, "density_threshold", sp.density_thr);
  put(c, "coverage_mean_upto_0.5", cov_half);
  put(c, "coverage_threshold", sp.coverage_thr);
  c.pass = density.value >= sp.density_thr && cov_half >= sp.coverage_thr;
  return c;
}

// TC2: density ~ 1 exactly when the correlation score classifies the system
// as weakly mixing, across the three headline systems.
TheoremCheck tc2(const ScaleParams& sp, std::uint64_t seed,
                 const std::string& ovr, int threads) {
  TheoremCheck c{"TC2", "Li-Yorke density matches weak-mixing score", false, {}};
  struct Row {
    const char* sys_name;
    const char* metric_name;
    bool expect_wm;
  };
  const Row rows[] = {{"doubling", "circle", true},
                      {"rotation", "circle", false},
                      {"product-doubling-2", "sum-circle", false}};
  bool all = true;
  int idx = 0;
  for (const Row& row : rows) {
    System sys = catalog_system(row.sys_name);
    Metric metric = pick(ovr, sys, catalog_metric(row.metric_name, sys));
    auto cfg = AnalysisConfig::with_horizon(sp.horizon, sp.pairs,
                                            check_seed(seed, 2 + idx));
    Estimate density = li_yorke_density(sys, metric, cfg, threads);
    CorrelationReport rep =
        weak_mixing_score(sys, kWeakMixingPartition, 128, sp.spectral_samples,
                          check_seed(seed, 202 + idx), threads);
    bool wm = classify_weak_mixing(rep, kWeakMixingThreshold);
    bool dense = density.value >= sp.density_thr;
    std::string tag(row.sys_name);
    put(c, tag + ".density", density.value);
    put(c, tag + ".score", rep.score);
    put(c, tag + ".weakly_mixing", wm ? 1.0 : 0.0);
    if (wm != row.expect_wm || dense != row.expect_wm) all = false;
    ++idx;
  }
  put(c, "score_threshold", kWeakMixingThreshold);
  c.pass = all;
  return c;
}

// TC3: the eigenfunction arc partition kills proximality on the rotation,
// exactly, for every pair separated by at least one arc.
TheoremCheck tc3(const ScaleParams& sp, std::uint64_t seed, int threads) {
  (void)threads;
  TheoremCheck c{"TC3", "eigenfunction partition blocks proximality", false, {}};
  System sys = System::rotation();
  Metric metric = build_eigenfunction_partition(8);
  auto cfg = AnalysisConfig::with_horizon(sp.obstruction_horizon, sp.obstruction_pairs,
                                          check_seed(seed, 3));
  RngStream rng(cfg.seed, stream_id(stream_tag::kHarness, 33));
  std::int64_t tested = 0, violations = 0;
  while (tested < sp.obstruction_pairs) {
    Point p = sample_point(sys, rng);
    Point q = sample_point(sys, rng);
    if (circle_distance(p.coord, q.coord) < 0.125) continue;
    ++tested;
    PairStats stats = pair_stats(sys, metric, p, q, cfg);
    if (stats.tail_min != 1.0) ++violations;
  }
  put(c, "pairs_tested", double(tested));
  put(c, "violations", double(violations));
  c.pass = violations == 0;
  return c;
}

// TC4: the two-point product is W-measurably sensitive yet only half of all
// pairs are Li-Yorke.
TheoremCheck tc4(const ScaleParams& sp, std::uint64_t seed,
                 const std::string& ovr, int threads) {
  TheoremCheck c{"TC4", "product system separates sensitivity notions", false, {}};
  System sys = catalog_system("product-doubling-2");
  Metric metric = pick(ovr, sys, catalog_metric("sum-circle", sys));

  auto prof_cfg = AnalysisConfig::with_horizon(
      std::min<std::int64_t>(sp.horizon, 10000), 1000, check_seed(seed, 4));
  RngStream xs(prof_cfg.seed, stream_id(stream_tag::kHarness, 44));
  double min_profile = 1.0;
  for (int i = 0; i < 10; ++i) {
    Point x = sample_point(sys, xs);
    double frac = sensitivity_profile(sys, metric, x, prof_cfg, threads);
    min_profile = std::min(min_profile, frac);
  }

  auto cfg = AnalysisConfig::with_horizon(sp.horizon, sp.pairs, check_seed(seed, 104));
  Estimate density = li_yorke_density(sys, metric, cfg, threads);

  put(c, "min_sensitivity_profile", min_profile);
  put(c, "profile_threshold", sp.profile_thr);
  put(c, "density", density.value);
  put(c, "density_low", sp.tc4_lo);
  put(c, "density_high", sp.tc4_hi);
  c.pass = min_profile >= sp.profile_thr && density.value >= sp.tc4_lo &&
           density.value <= sp.tc4_hi;
  return c;
}

// TC5: the spillover metric makes the rotation separate almost every pair to
// the full distance 1.
TheoremCheck tc5(const ScaleParams& sp, std::uint64_t seed, int threads) {
  (void)threads;
  TheoremCheck c{"TC5", "spillover metric is sensitive on the rotation", false, {}};
  System sys = System::rotation();
  Metric metric = build_spillover_metric(sys);
  auto cfg = AnalysisConfig::with_horizon(sp.spillover_horizon, sp.spillover_pairs,
                                          check_seed(seed, 5));
  RngStream rng(cfg.seed, stream_id(stream_tag::kHarness, 55));
  std::int64_t reached = 0, tested = 0;
  while (tested < sp.spillover_pairs) {
    Point p = sample_point(sys, rng);
    Point q = sample_point(sys, rng);
    if (p.coord == q.coord) continue;
    ++tested;
    PairStats stats = pair_stats(sys, metric, p, q, cfg);
    if (stats.tail_max == 1.0) ++reached;
  }
  double frac = double(reached) / double(tested);
  put(c, "pairs_tested", double(tested));
  put(c, "fraction_reaching_1", frac);
  put(c, "threshold", sp.spillover_thr);
  c.pass = frac >= sp.spillover_thr;
  return c;
}

// TC6: with a positive-measure set of fixed points, every catalog metric is
// insensitive on close pairs in the identity region, and the spillover
// construction refuses the system outright.
TheoremCheck tc6(const ScaleParams& sp, std::uint64_t seed, int threads) {
  (void)threads;
  TheoremCheck c{"TC6", "periodic part obstructs every sensitive metric", false, {}};
  System sys = System::periodic_hybrid(0.5);
  auto cfg = AnalysisConfig::with_horizon(512, 1000, check_seed(seed, 6));
  RngStream rng(cfg.seed, stream_id(stream_tag::kHarness, 66));

  std::int64_t violations = 0;
  double metrics_checked = 0;
  for (const std::string& name : catalog_metric_names()) {
    if (name == "spillover") continue;
    Metric metric = catalog_metric(name, sys);
    metrics_checked += 1.0;
    std::int64_t tested = 0;
    for (std::int64_t tries = 0; tries < 20000 && tested < 200; ++tries) {
      Point p = sample_point(sys, rng);
      Point q = sample_point(sys, rng);
      if (p.coord >= 0.5 || q.coord >= 0.5) continue;
      if (metric.eval(p, q, sys) >= cfg.delta_sep) continue;
      ++tested;
      if (classify(pair_stats(sys, metric, p, q, cfg), cfg).separated)
        ++violations;
    }
  }

  bool spillover_refused = false;
  try {
    (void)build_spillover_metric(sys);
  } catch (const std::invalid_argument&) {
    spillover_refused = true;
  }

  auto dens_cfg = AnalysisConfig::with_horizon(
      std::min<std::int64_t>(sp.horizon, 10000), 1000, check_seed(seed, 106));
  Estimate density = li_yorke_density(sys, Metric::circle_arc(), dens_cfg, threads);

  put(c, "metrics_checked", metrics_checked);
  put(c, "separation_violations", double(violations));
  put(c, "spillover_refused", spillover_refused ? 1.0 : 0.0);
  put(c, "density", density.value);
  put(c, "density_bound", 0.8);
  c.pass = violations == 0 && spillover_refused && density.value <= 0.8;
  return c;
}

// TC7: a greedy scrambled set reaches size 50 on the doubling map, and
// stalls at a single point on the rotation.
TheoremCheck tc7(const ScaleParams& sp, std::uint64_t seed, int threads) {
  (void)threads;
  TheoremCheck c{"TC7", "greedy scrambled set grows iff the system mixes", false, {}};
  System doubling = System::doubling();
  auto cfg = AnalysisConfig::with_horizon(
      std::min<std::int64_t>(sp.horizon, 10000), 1, check_seed(seed, 7));
  ScrambledResult grown =
      greedy_scrambled_set(doubling, Metric::circle_arc(), cfg, 50, 5000);

  System rotation = System::rotation();
  auto rcfg = AnalysisConfig::with_horizon(
      std::min<std::int64_t>(sp.horizon, 10000), 1, check_seed(seed, 107));
  ScrambledResult stalled =
      greedy_scrambled_set(rotation, Metric::circle_arc(), rcfg, 2, 200);

  put(c, "doubling_set_size", double(grown.members.size()));
  put(c, "doubling_candidates_used", double(grown.candidates_used));
  put(c, "rotation_set_size", double(stalled.members.size()));
  c.pass = grown.reached_target && stalled.members.size() == 1;
  return c;
}

// TC8: the rotation with the arc metric is an isometry, so no Li-Yorke pairs
// exist and orbit distances never drift.
TheoremCheck tc8(const ScaleParams& sp, std::uint64_t seed,
                 const std::string& ovr, int threads) {
  TheoremCheck c{"TC8", "isometric rotation yields zero Li-Yorke pairs", false, {}};
  System sys = System::rotation();
  Metric metric = pick(ovr, sys, Metric::circle_arc());
  auto cfg = AnalysisConfig::with_horizon(sp.horizon, sp.pairs, check_seed(seed, 8));
  Estimate density = li_yorke_density(sys, metric, cfg, threads);

  RngStream rng(cfg.seed, stream_id(stream_tag::kHarness, 88));
  double max_drift = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Point p = sample_point(sys, rng);
    Point q = sample_point(sys, rng);
    PairStats stats = pair_stats(sys, metric, p, q, cfg);
    max_drift = std::max(max_drift, stats.tail_max - stats.tail_min);
  }
  put(c, "density", density.value);
  put(c, "max_tail_drift", max_drift);
  put(c, "drift_bound", 2e-9);
  c.pass = density.value == 0.0 && max_drift <= 2e-9;
  return c;
}

}  // namespace

SuiteResult run_theorem_suite(std::uint64_t seed, Scale scale, int threads,
                              const std::string& metric_override) {
  ScaleParams sp = params_for(scale);
  SuiteResult suite;
  suite.seed = seed;
  suite.scale = scale;
  suite.checks.push_back(tc1(sp, seed, metric_override, threads));
  suite.checks.push_back(tc2(sp, seed, metric_override, threads));
  suite.checks.push_back(tc3(sp, seed, threads));
  suite.checks.push_back(tc4(sp, seed, metric_override, threads));
  suite.checks.push_back(tc5(sp, seed, threads));
  suite.checks.push_back(tc6(sp, seed, threads));
  suite.checks.push_back(tc7(sp, seed, threads));
  suite.checks.push_back(tc8(sp, seed, metric_override, threads));
  suite.all_pass = true;
  for (const TheoremCheck& c : suite.checks)
    if (!c.pass) suite.all_pass = false;
  return suite;
}

}  // namespace liyorke
