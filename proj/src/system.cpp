#include "liyorke/system.hpp"

#include <cmath>
#include <stdexcept>

namespace liyorke {

namespace {

unsigned tag_bits(std::initializer_list<GroundTruth> tags) {
  unsigned bits = 0;
  for (GroundTruth t : tags) bits |= unsigned(t);
  return bits;
}

double wrap1(double x) {
  if (x >= 1.0) x -= 1.0;
  return x;
}

}  // namespace

const char* ground_truth_name(GroundTruth tag) {
  switch (tag) {
    case GroundTruth::MeasurePreserving: return "measure_preserving";
    case GroundTruth::Ergodic: return "ergodic";
    case GroundTruth::WeaklyMixing: return "weakly_mixing";
    case GroundTruth::ProductErgodic: return "product_ergodic";
    case GroundTruth::IsometryAdmitting: return "isometry_admitting";
    case GroundTruth::Aperiodic: return "aperiodic";
    case GroundTruth::HasPeriodicPart: return "has_periodic_part";
  }
  return "?";
}

System System::rotation(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("rotation angle must lie in (0,1)");
  System s;
  s.kind_ = SystemKind::IrrationalRotation;
  s.alpha_ = alpha;
  s.tags_ = tag_bits({GroundTruth::MeasurePreserving, GroundTruth::Ergodic,
                      GroundTruth::IsometryAdmitting, GroundTruth::Aperiodic});
  s.name_ = "rotation";
  return s;
}

System System::doubling() {
  System s;
  s.kind_ = SystemKind::DoublingMap;
  s.tags_ = tag_bits({GroundTruth::MeasurePreserving, GroundTruth::Ergodic,
                      GroundTruth::WeaklyMixing, GroundTruth::ProductErgodic,
                      GroundTruth::Aperiodic});
  s.name_ = "doubling";
  return s;
}

System System::product(System base, int k) {
  if (k < 2) throw std::invalid_argument("product needs k >= 2 labels");
  if (base.kind() == SystemKind::ProductWithFiniteRotation)
    throw std::invalid_argument("product base must be a plain interval system");
  System s;
  s.kind_ = SystemKind::ProductWithFiniteRotation;
  s.components_ = k;
  s.name_ = "product-" + base.name_ + "-" + std::to_string(k);
  // base x finite rotation: measure-preserving and ergodic when the base is
  // weakly mixing, never weakly mixing itself (the label factor is a rotation)
  unsigned bits =
      tag_bits({GroundTruth::MeasurePreserving, GroundTruth::Aperiodic});
  if (base.has_tag(GroundTruth::WeaklyMixing))
    bits |= unsigned(GroundTruth::Ergodic);
  s.tags_ = bits;
  s.base_ = std::make_shared<System>(std::move(base));
  return s;
}

System System::periodic_hybrid(double periodic_fraction) {
  if (!(periodic_fraction > 0.0 && periodic_fraction < 1.0))
    throw std::invalid_argument("periodic_fraction must lie in (0,1)");
  System s;
  s.kind_ = SystemKind::PeriodicHybrid;
  s.periodic_fraction_ = periodic_fraction;
  s.tags_ = tag_bits({GroundTruth::MeasurePreserving, GroundTruth::HasPeriodicPart});
  s.name_ = "periodic-hybrid";
  return s;
}

System System::identity() {
  System s;
  s.kind_ = SystemKind::Identity;
  s.tags_ = tag_bits({GroundTruth::MeasurePreserving, GroundTruth::HasPeriodicPart,
                      GroundTruth::IsometryAdmitting});
  s.name_ = "identity";
  return s;
}

std::vector<GroundTruth> System::tags() const {
  std::vector<GroundTruth> out;
  for (GroundTruth t :
       {GroundTruth::MeasurePreserving, GroundTruth::Ergodic,
        GroundTruth::WeaklyMixing, GroundTruth::ProductErgodic,
        GroundTruth::IsometryAdmitting, GroundTruth::Aperiodic,
        GroundTruth::HasPeriodicPart}) {
    if (has_tag(t)) out.push_back(t);
  }
  return out;
}

void validate_point(const System& sys, const Point& p) {
  if (!(p.coord >= 0.0 && p.coord < 1.0))
    throw std::domain_error("coordinate outside [0,1)");
  if (p.label < 0 || p.label >= sys.component_count())
    throw std::domain_error("label outside the system's components");
}

namespace {

double step_coord(const System& sys, double x) {
  switch (sys.kind()) {
    case SystemKind::IrrationalRotation:
      return wrap1(x + sys.alpha());
    case SystemKind::DoublingMap:
      return wrap1(x + x);
    case SystemKind::PeriodicHybrid: {
      double f = sys.periodic_fraction();
      if (x < f) return x;
      double y = x - f;
      y += y;
      double w = 1.0 - f;
      if (y >= w) y -= w;
      return f + y;
    }
    case SystemKind::ProductWithFiniteRotation:
      return step_coord(sys.base(), x);
    case SystemKind::Identity:
    default:
      return x;
  }
}

}  // namespace

Point iterate(const System& sys, Point p, std::uint64_t n) {
  validate_point(sys, p);
  for (std::uint64_t i = 0; i < n; ++i) p.coord = step_coord(sys, p.coord);
  if (sys.component_count() > 1)
    p.label = int((std::uint64_t(p.label) + n) % sys.component_count());
  return p;
}

Point sample_point(const System& sys, RngStream& rng) {
  Point p;
  p.coord = rng.next_double();
  int k = sys.component_count();
  p.label = k > 1 ? int(rng.next_u64() % std::uint64_t(k)) : 0;
  return p;
}

}  // namespace liyorke
