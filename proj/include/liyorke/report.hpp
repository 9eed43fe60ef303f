#pragma once

#include <string>

#include "liyorke/analysis.hpp"
#include "liyorke/harness.hpp"
#include "liyorke/metric.hpp"
#include "liyorke/spectral.hpp"
#include "liyorke/system.hpp"

#include <nlohmann/json.hpp>

namespace liyorke {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

using ordered_json = nlohmann::ordered_json;

ordered_json system_descriptor(const System& sys);
ordered_json metric_descriptor(const Metric& metric);
ordered_json config_descriptor(const AnalysisConfig& cfg);

// Full analyze-report assembly: any section may be absent.
struct AnalysisReport {
  System system;
  Metric metric;
  AnalysisConfig config;
  std::optional<Estimate> density;
  std::vector<std::pair<Point, double>> sensitivity;  // (x, fraction)
  std::optional<CoverageReport> coverage;
  std::optional<ScrambledResult> scrambled;
  std::optional<CorrelationReport> correlation;
  AnalysisReport(System s, Metric m, AnalysisConfig c)
      : system(std::move(s)), metric(std::move(m)), config(c) {}
};

ordered_json report_to_json(const AnalysisReport& report);
std::string report_to_csv(const AnalysisReport& report);

ordered_json suite_to_json(const SuiteResult& suite);
std::string suite_to_csv(const SuiteResult& suite);

// shortest round-trip decimal representation
std::string format_double(double v);

}  // namespace liyorke
