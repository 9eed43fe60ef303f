#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liyorke/point.hpp"
#include "liyorke/rng.hpp"
#include "liyorke/system.hpp"

namespace liyorke {

enum class MetricKind {
  CircleArc,
  Euclidean,
  PullbackMonotone,
  SumProduct,
  ArcPartition,
  SpilloverCells,
  DynamicSup,
  Discrete,
};

// Cell layout for the spillover metric: D_0 = [0, 1/2); block k >= 1 is
// [1-2^-k, 1-2^-(k-1)/2) split into 2^(k-1) cells of width 2^-2k.  Cells are
// left-closed, so the index is a pure function of the coordinate.
struct CellSchedule {
  std::int64_t cell_index(double x) const;
  double cell_diameter(std::int64_t index) const;
  // [low, low+diameter) of a cell, for tests
  double cell_low(std::int64_t index) const;
};

// Immutable metric on the state space, values in [0,1].  Scalar kinds compare
// coordinates; SumProduct and Discrete also see the label.
class Metric {
 public:
  static Metric circle_arc();
  static Metric euclidean();
  static Metric discrete();
  // piecewise-linear monotone f given by knots (x_i, y_i); d = |f(x)-f(y)|
  static Metric pullback(std::vector<double> xs, std::vector<double> ys);
  static Metric sum_product(Metric base, double label_distance);
  static Metric arc_partition(int m, Metric intra);
  static Metric spillover_cells(Metric intra);
  static Metric dynamic_sup(Metric base, int horizon);

  double eval(const Point& p, const Point& q) const;
  double eval(const Point& p, const Point& q, const System& sys) const;
  bool needs_system() const;

  MetricKind kind() const { return kind_; }
  int partition_cells() const { return cells_; }
  int sup_horizon() const { return horizon_; }
  double label_distance() const { return label_distance_; }
  const Metric* inner() const { return inner_.get(); }
  const CellSchedule& schedule() const { return schedule_; }
  std::string name() const;

 private:
  Metric() = default;
  double eval_impl(const Point& p, const Point& q, const System* sys) const;

  MetricKind kind_ = MetricKind::CircleArc;
  double label_distance_ = 0.0;
  int cells_ = 0;    // ArcPartition m
  int horizon_ = 0;  // DynamicSup truncation
  std::vector<double> knots_x_, knots_y_;
  CellSchedule schedule_;
  std::shared_ptr<const Metric> inner_;
};

// Statistical mu-compatibility certificate: a ball with zero hits among M
// samples is reported as a violation.
struct CompatibilityCertificate {
  int centers = 0;
  std::vector<double> radii;
  std::int64_t samples = 0;
  double min_mass = 1.0;
  bool compatible = true;
  std::optional<Point> violation_center;
  double violation_radius = 0.0;
};

CompatibilityCertificate check_mu_compatible(const Metric& metric,
                                             const System& sys, int centers,
                                             std::vector<double> radii,
                                             std::int64_t samples,
                                             RngStream rng);

struct IsometryResult {
  bool isometry = true;
  Point p, q;
  double before = 0.0, after = 0.0;
};

// Samples pairs and compares d(p,q) against d(Tp,Tq).
IsometryResult check_isometry(const Metric& metric, const System& sys,
                              int pairs, double tol, RngStream rng);

// ArcPartition over the m arcs [ (i-1)/m, i/m ) of the circle eigenfunction,
// cross-cell value 1, Euclidean inside a cell.
Metric build_eigenfunction_partition(int m);

// SpilloverCells over the default schedule; refused for systems with a
// positive-measure periodic part, which admit no sensitive compatible metric.
Metric build_spillover_metric(const System& sys);

}  // namespace liyorke
