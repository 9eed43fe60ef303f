#include "liyorke/catalog.hpp"

#include <stdexcept>

namespace liyorke {

std::vector<std::string> catalog_system_names() {
  return {"rotation", "doubling", "product-doubling-2", "periodic-hybrid",
          "identity"};
}

std::vector<std::string> catalog_metric_names() {
  return {"circle",    "euclidean",   "sum-circle", "arc-partition-8",
          "spillover", "dynamic-sup", "pullback",   "discrete"};
}

System catalog_system(const std::string& name) {
  if (name == "rotation") return System::rotation();
  if (name == "doubling") return System::doubling();
  if (name == "product-doubling-2") return System::product(System::doubling(), 2);
  if (name == "periodic-hybrid") return System::periodic_hybrid(0.5);
  if (name == "identity") return System::identity();
  throw std::invalid_argument("unknown system: " + name);
}

Metric catalog_metric(const std::string& name, const System& sys) {
  if (name == "circle") return Metric::circle_arc();
  if (name == "euclidean") return Metric::euclidean();
  if (name == "sum-circle") return Metric::sum_product(Metric::circle_arc(), 1.0);
  if (name == "arc-partition-8") return build_eigenfunction_partition(8);
  if (name == "spillover") return build_spillover_metric(sys);
  if (name == "dynamic-sup")
    return Metric::dynamic_sup(Metric::circle_arc(), 1024);
  if (name == "pullback")
    return Metric::pullback({0.0, 0.5, 1.0}, {0.0, 0.25, 1.0});
  if (name == "discrete") return Metric::discrete();
  throw std::invalid_argument("unknown metric: " + name);
}

std::string metric_catalog_description(const std::string& name) {
  if (name == "circle") return "normalized arc length on the circle";
  if (name == "euclidean") return "absolute coordinate difference";
  if (name == "sum-circle")
    return "circle arc plus unit label distance, clamped to 1";
  if (name == "arc-partition-8")
    return "8 eigenfunction arcs, cross-cell 1, euclidean inside";
  if (name == "spillover")
    return "shrinking-cell partition metric, cross-cell 1";
  if (name == "dynamic-sup")
    return "running sup of circle arc along the orbit, horizon 1024";
  if (name == "pullback")
    return "pullback |f(x)-f(y)| through a piecewise-linear monotone f";
  if (name == "discrete")
    return "0/1 metric; mu-compatibility negative control";
  return "";
}

}  // namespace liyorke
