#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "liyorke/catalog.hpp"
#include "liyorke/report.hpp"

namespace {

using namespace liyorke;

class Timer {
 public:
  explicit Timer(const char* section) : section_(section), start_(clock::now()) {}
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  clock::now() - start_)
                  .count();
    // timings go to stderr so reports stay byte-identical across machines
    std::cerr << "[time] " << section_ << ": " << ms << " ms\n";
  }

 private:
  using clock = std::chrono::steady_clock;
  const char* section_;
  clock::time_point start_;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CLI::ValidationError("--out", "cannot open " + out_path);
  out << text;
}

int cmd_list(bool metrics_only, bool systems_only, bool as_json) {
  ordered_json j;
  if (!metrics_only) {
    ordered_json systems = ordered_json::array();
    for (const std::string& name : catalog_system_names())
      systems.push_back(system_descriptor(catalog_system(name)));
    j["systems"] = systems;
  }
  if (!systems_only) {
    ordered_json metrics = ordered_json::array();
    for (const std::string& name : catalog_metric_names())
      metrics.push_back(ordered_json{
          {"name", name}, {"description", metric_catalog_description(name)}});
    j["metrics"] = metrics;
  }
  if (as_json) {
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (j.contains("systems")) {
    std::cout << "systems:\n";
    for (const auto& s : j["systems"]) {
      std::cout << "  " << s["name"].get<std::string>() << "  [";
      bool first = true;
      for (const auto& t : s["tags"]) {
        if (!first) std::cout << ", ";
        std::cout << t.get<std::string>();
        first = false;
      }
      std::cout << "]\n";
    }
  }
  if (j.contains("metrics")) {
    std::cout << "metrics:\n";
    for (const auto& m : j["metrics"])
      std::cout << "  " << m["name"].get<std::string>() << "  - "
                << m["description"].get<std::string>() << '\n';
  }
  return 0;
}

struct AnalyzeFlags {
  std::string system = "doubling";
  std::string metric = "circle";
  std::int64_t horizon = 10000;
  std::int64_t burn_in = -1;  // default: horizon / 2
  std::int64_t pairs = 1000;
  double eps = 0.01;
  double delta = 0.1;
  std::uint64_t seed = 0;
  double grid_step = 0.05;
  double tol = 0.01;
  int profiles = 0;
  bool coverage = false;
  int scrambled_target = 0;
  bool score = false;
  std::int64_t score_horizon = 64;
  std::int64_t score_samples = 10000;
  std::string format = "json";
  std::string out;
  int threads = 1;
};

int cmd_analyze(const AnalyzeFlags& f) {
  System sys = catalog_system(f.system);
  Metric metric = catalog_metric(f.metric, sys);

  AnalysisConfig cfg;
  cfg.horizon = f.horizon;
  cfg.burn_in = f.burn_in >= 0 ? f.burn_in : f.horizon / 2;
  cfg.pair_count = f.pairs;
  cfg.eps_prox = f.eps;
  cfg.delta_sep = f.delta;
  cfg.seed = f.seed;
  cfg.validate();

  AnalysisReport report(sys, metric, cfg);
  {
    Timer t("density");
    report.density = li_yorke_density(sys, metric, cfg, f.threads);
  }
  if (f.profiles > 0) {
    Timer t("sensitivity");
    RngStream rng(cfg.seed, stream_id(stream_tag::kSensitivity, ~0ull));
    for (int i = 0; i < f.profiles; ++i) {
      Point x = sample_point(sys, rng);
      report.sensitivity.emplace_back(
          x, sensitivity_profile(sys, metric, x, cfg, f.threads));
    }
  }
  if (f.coverage) {
    Timer t("coverage");
    report.coverage =
        distance_coverage(sys, metric, cfg, f.grid_step, f.tol, f.threads);
  }
  if (f.scrambled_target > 0) {
    Timer t("scrambled");
    report.scrambled = greedy_scrambled_set(sys, metric, cfg, f.scrambled_target,
                                            100 * f.scrambled_target);
  }
  if (f.score) {
    Timer t("correlation");
    report.correlation =
        weak_mixing_score(sys, kWeakMixingPartition, f.score_horizon,
                          f.score_samples, cfg.seed, f.threads);
  }

  if (f.format == "csv")
    emit(report_to_csv(report), f.out);
  else
    emit(report_to_json(report).dump(2) + "\n", f.out);
  return 0;
}

struct TheoremFlags {
  std::string scale = "quick";
  std::uint64_t seed = 7;
  std::string format = "json";
  std::string out;
  int threads = 1;
  std::string metric_override;
};

int cmd_theorems(const TheoremFlags& f) {
  Scale scale = f.scale == "full" ? Scale::Full : Scale::Quick;
  SuiteResult suite;
  {
    Timer t("theorem suite");
    suite = run_theorem_suite(f.seed, scale, f.threads, f.metric_override);
  }
  if (f.format == "csv")
    emit(suite_to_csv(suite), f.out);
  else
    emit(suite_to_json(suite).dump(2) + "\n", f.out);
  for (const TheoremCheck& c : suite.checks)
    std::cerr << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << "  " << c.title
              << '\n';
  return suite.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Li-Yorke sensitivity laboratory"};
  app.require_subcommand(1);

  bool list_metrics = false, list_systems = false, list_json = false;
  auto* list = app.add_subcommand("list", "catalog of systems and metrics");
  list->add_flag("--metrics", list_metrics, "metrics only");
  list->add_flag("--systems", list_systems, "systems only");
  list->add_flag("--json", list_json, "machine-readable output");

  AnalyzeFlags af;
  auto* analyze = app.add_subcommand("analyze", "Li-Yorke statistics for one system/metric");
  analyze->add_option("--system", af.system, "catalog system name");
  analyze->add_option("--metric", af.metric, "catalog metric name");
  analyze->add_option("--horizon", af.horizon, "orbit length N");
  analyze->add_option("--burn-in", af.burn_in, "tail start N0 (default N/2)");
  analyze->add_option("--pairs", af.pairs, "Monte Carlo pair count M");
  analyze->add_option("--eps", af.eps, "proximality threshold");
  analyze->add_option("--delta", af.delta, "separation threshold");
  analyze->add_option("--seed", af.seed, "master seed");
  analyze->add_option("--grid-step", af.grid_step, "coverage grid step");
  analyze->add_option("--tol", af.tol, "coverage tolerance");
  analyze->add_option("--profiles", af.profiles, "sensitivity profiles to run");
  analyze->add_flag("--coverage", af.coverage, "attained-distance coverage");
  analyze->add_option("--scrambled", af.scrambled_target, "greedy scrambled-set target size");
  analyze->add_flag("--score", af.score, "correlation decay score");
  analyze->add_option("--score-horizon", af.score_horizon, "correlation horizon");
  analyze->add_option("--score-samples", af.score_samples, "samples per correlation term");
  analyze->add_option("--format", af.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--out", af.out, "output path (default stdout)");
  analyze->add_option("--threads", af.threads, "worker threads");

  TheoremFlags tf;
  auto* theorems = app.add_subcommand("theorems", "run the theorem check suite");
  theorems->add_option("--scale", tf.scale, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  theorems->add_option("--seed", tf.seed, "master seed");
  theorems->add_option("--format", tf.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  theorems->add_option("--out", tf.out, "output path (default stdout)");
  theorems->add_option("--threads", tf.threads, "worker threads");
  theorems->add_option("--metric-override", tf.metric_override,
                       "replace default metrics in density checks");

  try {
    app.parse(argc, argv);
    if (list->parsed()) return cmd_list(list_metrics, list_systems, list_json);
    if (analyze->parsed()) return cmd_analyze(af);
    return cmd_theorems(tf);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
