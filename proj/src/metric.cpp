#include "liyorke/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "liyorke/orbit.hpp"

namespace liyorke {

std::int64_t CellSchedule::cell_index(double x) const {
  if (x < 0.5) return 0;
  // block k = [1-2^-k, 1-2^-(k+1)); a double < 1 lands in block k <= 52
  int k = 1;
  while (x >= 1.0 - std::ldexp(1.0, -(k + 1))) ++k;
  double low = 1.0 - std::ldexp(1.0, -k);
  auto offset = std::int64_t((x - low) * std::ldexp(1.0, 2 * k));
  std::int64_t cells_in_block = std::int64_t(1) << (k - 1);
  if (offset < 0) offset = 0;
  if (offset >= cells_in_block) offset = cells_in_block - 1;
  return cells_in_block + offset;  // 1 + sum_{j<k} 2^(j-1) == 2^(k-1)
}

double CellSchedule::cell_diameter(std::int64_t index) const {
  if (index == 0) return 0.5;
  int k = 0;
  while ((std::int64_t(1) << k) <= index) ++k;  // index in [2^(k-1), 2^k)
  return std::ldexp(1.0, -2 * k);
}

double CellSchedule::cell_low(std::int64_t index) const {
  if (index == 0) return 0.0;
  int k = 0;
  while ((std::int64_t(1) << k) <= index) ++k;
  std::int64_t offset = index - (std::int64_t(1) << (k - 1));
  return 1.0 - std::ldexp(1.0, -k) + double(offset) * std::ldexp(1.0, -2 * k);
}

Metric Metric::circle_arc() {
  Metric m;
  m.kind_ = MetricKind::CircleArc;
  return m;
}

Metric Metric::euclidean() {
  Metric m;
  m.kind_ = MetricKind::Euclidean;
  return m;
}

Metric Metric::discrete() {
  Metric m;
  m.kind_ = MetricKind::Discrete;
  return m;
}

Metric Metric::pullback(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("pullback needs matching knot lists, size >= 2");
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] > xs[i - 1]) || ys[i] < ys[i - 1])
      throw std::invalid_argument("pullback knots must be monotone");
  Metric m;
  m.kind_ = MetricKind::PullbackMonotone;
  m.knots_x_ = std::move(xs);
  m.knots_y_ = std::move(ys);
  return m;
}

Metric Metric::sum_product(Metric base, double label_distance) {
  if (!(label_distance > 0.0 && label_distance <= 1.0))
    throw std::invalid_argument("label_distance must lie in (0,1]");
  Metric m;
  m.kind_ = MetricKind::SumProduct;
  m.label_distance_ = label_distance;
  m.inner_ = std::make_shared<Metric>(std::move(base));
  return m;
}

Metric Metric::arc_partition(int cells, Metric intra) {
  if (cells < 2) throw std::invalid_argument("arc partition needs m >= 2");
  Metric m;
  m.kind_ = MetricKind::ArcPartition;
  m.cells_ = cells;
  m.inner_ = std::make_shared<Metric>(std::move(intra));
  return m;
}

Metric Metric::spillover_cells(Metric intra) {
  Metric m;
  m.kind_ = MetricKind::SpilloverCells;
  m.inner_ = std::make_shared<Metric>(std::move(intra));
  return m;
}

Metric Metric::dynamic_sup(Metric base, int horizon) {
  if (horizon < 1) throw std::invalid_argument("dynamic sup needs horizon >= 1");
  Metric m;
  m.kind_ = MetricKind::DynamicSup;
  m.horizon_ = horizon;
  m.inner_ = std::make_shared<Metric>(std::move(base));
  return m;
}

bool Metric::needs_system() const {
  if (kind_ == MetricKind::DynamicSup) return true;
  return inner_ && inner_->needs_system();
}

namespace {

double pl_interp(const std::vector<double>& xs, const std::vector<double>& ys,
                 double x) {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return ys.front();
  if (it == xs.end()) return ys.back();
  std::size_t i = std::size_t(it - xs.begin());
  double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

}  // namespace

double Metric::eval_impl(const Point& p, const Point& q,
                         const System* sys) const {
  switch (kind_) {
    case MetricKind::CircleArc:
      return circle_distance(p.coord, q.coord);
    case MetricKind::Euclidean:
      return std::fabs(p.coord - q.coord);
    case MetricKind::PullbackMonotone:
      return std::fabs(pl_interp(knots_x_, knots_y_, p.coord) -
                       pl_interp(knots_x_, knots_y_, q.coord));
    case MetricKind::SumProduct: {
      double d = inner_->eval_impl(p, q, sys);
      if (p.label != q.label) d += label_distance_;
      return d < 1.0 ? d : 1.0;
    }
    case MetricKind::ArcPartition: {
      int ci = std::min(int(p.coord * cells_), cells_ - 1);
      int cj = std::min(int(q.coord * cells_), cells_ - 1);
      if (ci != cj) return 1.0;
      return inner_->eval_impl(p, q, sys);
    }
    case MetricKind::SpilloverCells: {
      if (schedule_.cell_index(p.coord) != schedule_.cell_index(q.coord))
        return 1.0;
      return inner_->eval_impl(p, q, sys);
    }
    case MetricKind::DynamicSup: {
      if (!sys)
        throw std::invalid_argument("dynamic sup metric needs a system");
      OrbitWalker wp(*sys, p), wq(*sys, q);
      double best = 0.0;
      for (int n = 0; n < horizon_; ++n) {
        double d = inner_->eval_impl(wp.current(), wq.current(), sys);
        if (d > best) best = d;
        if (best >= 1.0) break;
        wp.step();
        wq.step();
      }
      return best;
    }
    case MetricKind::Discrete:
    default:
      return (p.coord == q.coord && p.label == q.label) ? 0.0 : 1.0;
  }
}

double Metric::eval(const Point& p, const Point& q) const {
  return eval_impl(p, q, nullptr);
}

double Metric::eval(const Point& p, const Point& q, const System& sys) const {
  return eval_impl(p, q, &sys);
}

std::string Metric::name() const {
  switch (kind_) {
    case MetricKind::CircleArc: return "circle";
    case MetricKind::Euclidean: return "euclidean";
    case MetricKind::PullbackMonotone: return "pullback";
    case MetricKind::SumProduct:
      return "sum(" + inner_->name() + "," + std::to_string(label_distance_) + ")";
    case MetricKind::ArcPartition:
      return "arc-partition-" + std::to_string(cells_);
    case MetricKind::SpilloverCells: return "spillover";
    case MetricKind::DynamicSup:
      return "dynamic-sup(" + inner_->name() + "," + std::to_string(horizon_) + ")";
    case MetricKind::Discrete:
    default: return "discrete";
  }
}

CompatibilityCertificate check_mu_compatible(const Metric& metric,
                                             const System& sys, int centers,
                                             std::vector<double> radii,
                                             std::int64_t samples,
                                             RngStream rng) {
  if (samples < 1000)
    throw std::invalid_argument("need at least 10^3 samples per ball");
  for (double r : radii)
    if (!(r > 0.0)) throw std::invalid_argument("radii must be positive");

  CompatibilityCertificate cert;
  cert.centers = centers;
  cert.radii = radii;
  cert.samples = samples;
  for (int c = 0; c < centers; ++c) {
    Point center = sample_point(sys, rng);
    std::vector<std::int64_t> hits(radii.size(), 0);
    for (std::int64_t s = 0; s < samples; ++s) {
      Point y = sample_point(sys, rng);
      double d = metric.eval(center, y, sys);
      for (std::size_t ri = 0; ri < radii.size(); ++ri)
        if (d < radii[ri]) ++hits[ri];
    }
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
      double mass = double(hits[ri]) / double(samples);
      if (mass < cert.min_mass) cert.min_mass = mass;
      if (hits[ri] == 0 && cert.compatible) {
        cert.compatible = false;
        cert.violation_center = center;
        cert.violation_radius = radii[ri];
      }
    }
  }
  return cert;
}

IsometryResult check_isometry(const Metric& metric, const System& sys,
                              int pairs, double tol, RngStream rng) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  IsometryResult res;
  for (int i = 0; i < pairs; ++i) {
    Point p = sample_point(sys, rng);
    Point q = sample_point(sys, rng);
    double before = metric.eval(p, q, sys);
    double after = metric.eval(iterate(sys, p, 1), iterate(sys, q, 1), sys);
    if (std::fabs(after - before) > tol) {
      res.isometry = false;
      res.p = p;
      res.q = q;
      res.before = before;
      res.after = after;
      return res;
    }
  }
  return res;
}

Metric build_eigenfunction_partition(int m) {
  if (m < 2)
    throw std::invalid_argument("eigenfunction partition needs m >= 2");
  return Metric::arc_partition(m, Metric::euclidean());
}

Metric build_spillover_metric(const System& sys) {
  if (sys.has_tag(GroundTruth::HasPeriodicPart))
    throw std::invalid_argument(
        "a system with a positive-measure periodic part admits no "
        "mu-compatible sensitive metric");
  return Metric::spillover_cells(Metric::euclidean());
}

}  // namespace liyorke
