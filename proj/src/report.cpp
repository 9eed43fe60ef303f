#include "liyorke/report.hpp"

#include <charconv>
#include <sstream>

namespace liyorke {

std::string format_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ordered_json system_descriptor(const System& sys) {
  ordered_json j;
  j["name"] = sys.name();
  j["components"] = sys.component_count();
  std::vector<std::string> tags;
  for (GroundTruth t : sys.tags()) tags.emplace_back(ground_truth_name(t));
  j["tags"] = tags;
  if (sys.kind() == SystemKind::IrrationalRotation) j["alpha"] = sys.alpha();
  if (sys.kind() == SystemKind::PeriodicHybrid)
    j["periodic_fraction"] = sys.periodic_fraction();
  return j;
}

ordered_json metric_descriptor(const Metric& metric) {
  ordered_json j;
  j["name"] = metric.name();
  j["needs_system"] = metric.needs_system();
  return j;
}

ordered_json config_descriptor(const AnalysisConfig& cfg) {
  ordered_json j;
  j["horizon"] = cfg.horizon;
  j["burn_in"] = cfg.burn_in;
  j["eps"] = cfg.eps_prox;
  j["delta"] = cfg.delta_sep;
  j["pairs"] = cfg.pair_count;
  j["seed"] = cfg.seed;
  return j;
}

ordered_json report_to_json(const AnalysisReport& report) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kVersion;
  j["system"] = system_descriptor(report.system);
  j["metric"] = metric_descriptor(report.metric);
  j["config"] = config_descriptor(report.config);
  if (report.density) {
    j["density"] = {{"value", report.density->value},
                    {"half_width", report.density->half_width}};
  }
  if (!report.sensitivity.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& [x, frac] : report.sensitivity)
      rows.push_back({{"coord", x.coord}, {"label", x.label}, {"fraction", frac}});
    j["sensitivity"] = rows;
  }
  if (report.coverage) {
    const CoverageReport& cov = *report.coverage;
    j["coverage"] = {{"grid_step", cov.grid_step},
                     {"tol", cov.tol},
                     {"pairs", cov.pairs},
                     {"grid", cov.grid},
                     {"attained", cov.attained},
                     {"mean_fraction", cov.mean_fraction}};
  }
  if (report.scrambled) {
    const ScrambledResult& s = *report.scrambled;
    ordered_json members = ordered_json::array();
    for (const Point& p : s.members)
      members.push_back({{"coord", p.coord}, {"label", p.label}});
    j["scrambled"] = {{"size", s.members.size()},
                      {"reached_target", s.reached_target},
                      {"candidates_used", s.candidates_used},
                      {"members", members}};
  }
  if (report.correlation) {
    const CorrelationReport& c = *report.correlation;
    j["correlation"] = {{"partition", c.partition}, {"cells", c.cells},
                        {"horizon", c.horizon},     {"samples", c.samples},
                        {"score", c.score},         {"argmax_i", c.argmax_i},
                        {"argmax_j", c.argmax_j}};
  }
  return j;
}

namespace {

void csv_row(std::ostringstream& out, const std::string& metric,
             const std::string& statistic, double value, double half_width,
             const std::string& verdict) {
  out << metric << ',' << statistic << ',' << format_double(value) << ','
      << format_double(half_width) << ',' << verdict << '\n';
}

}  // namespace

std::string report_to_csv(const AnalysisReport& report) {
  std::ostringstream out;
  out << "metric,statistic,value,half_width,verdict\n";
  const std::string m = report.metric.name();
  if (report.density)
    csv_row(out, m, "li_yorke_density", report.density->value,
            report.density->half_width, "");
  for (std::size_t i = 0; i < report.sensitivity.size(); ++i)
    csv_row(out, m, "sensitivity_profile_" + std::to_string(i),
            report.sensitivity[i].second, 0.0, "");
  if (report.coverage)
    csv_row(out, m, "coverage_mean_fraction", report.coverage->mean_fraction,
            0.0, "");
  if (report.scrambled)
    csv_row(out, m, "scrambled_size", double(report.scrambled->members.size()),
            0.0, report.scrambled->reached_target ? "pass" : "fail");
  if (report.correlation)
    csv_row(out, m, "weak_mixing_score", report.correlation->score, 0.0, "");
  return out.str();
}

ordered_json suite_to_json(const SuiteResult& suite) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kVersion;
  j["seed"] = suite.seed;
  j["scale"] = suite.scale == Scale::Full ? "full" : "quick";
  ordered_json checks = ordered_json::array();
  for (const TheoremCheck& c : suite.checks) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["title"] = c.title;
    jc["pass"] = c.pass;
    ordered_json ev = ordered_json::object();
    for (const auto& [k, v] : c.evidence) ev[k] = v;
    jc["evidence"] = ev;
    checks.push_back(jc);
  }
  j["checks"] = checks;
  j["all_pass"] = suite.all_pass;
  return j;
}

std::string suite_to_csv(const SuiteResult& suite) {
  std::ostringstream out;
  out << "check_id,statistic,value,half_width,verdict\n";
  for (const TheoremCheck& c : suite.checks) {
    for (const auto& [k, v] : c.evidence)
      out << c.id << ',' << k << ',' << format_double(v) << ",0,"
          << (c.pass ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace liyorke
