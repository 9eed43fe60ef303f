#pragma once

#include <string>
#include <vector>

#include "liyorke/metric.hpp"
#include "liyorke/system.hpp"

namespace liyorke {

// Stable-ordered catalogs backing `list`, `analyze` and the theorem harness.
std::vector<std::string> catalog_system_names();
std::vector<std::string> catalog_metric_names();

// throws std::invalid_argument for unknown names
System catalog_system(const std::string& name);
// "spillover" is built against the system and may be refused for it
Metric catalog_metric(const std::string& name, const System& sys);

std::string metric_catalog_description(const std::string& name);

}  // namespace liyorke
