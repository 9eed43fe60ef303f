#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace liyorke {

enum class Scale { Quick, Full };

struct TheoremCheck {
  std::string id;
  std::string title;
  bool pass = false;
  // every number that decided the verdict, in a stable order
  std::vector<std::pair<std::string, double>> evidence;
};

struct SuiteResult {
  std::uint64_t seed = 0;
  Scale scale = Scale::Quick;
  std::vector<TheoremCheck> checks;
  bool all_pass = false;
};

// Runs the eight theorem checks.  metric_override, when nonempty, names a
// catalog metric that replaces the default metric of the density-style
// checks (a deliberate way to break the suite, e.g. with "discrete").
SuiteResult run_theorem_suite(std::uint64_t seed, Scale scale, int threads = 1,
                              const std::string& metric_override = "");

}  // namespace liyorke
