#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "liyorke/point.hpp"
#include "liyorke/rng.hpp"

namespace liyorke {

enum class SystemKind {
  IrrationalRotation,
  DoublingMap,
  ProductWithFiniteRotation,
  PeriodicHybrid,
  Identity,  // limit case of PeriodicHybrid, used as a spectral control
};

enum class GroundTruth : unsigned {
  MeasurePreserving = 1u << 0,
  Ergodic = 1u << 1,
  WeaklyMixing = 1u << 2,
  ProductErgodic = 1u << 3,
  IsometryAdmitting = 1u << 4,
  Aperiodic = 1u << 5,
  HasPeriodicPart = 1u << 6,
};

const char* ground_truth_name(GroundTruth tag);

// golden ratio conjugate, badly approximable
inline constexpr double kGoldenAlpha = 0.6180339887498949;

// A concrete transformation on [0,1) x {0..k-1} together with its
// ground-truth tags.  Lebesgue x uniform is the invariant measure for every
// catalog member.
class System {
 public:
  static System rotation(double alpha = kGoldenAlpha);
  static System doubling();
  static System product(System base, int k);
  static System periodic_hybrid(double periodic_fraction);
  static System identity();

  SystemKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double periodic_fraction() const { return periodic_fraction_; }
  int component_count() const { return components_; }
  const System& base() const { return *base_; }

  bool has_tag(GroundTruth tag) const { return tags_ & unsigned(tag); }
  std::vector<GroundTruth> tags() const;
  const std::string& name() const { return name_; }

 private:
  System() = default;
  SystemKind kind_ = SystemKind::Identity;
  double alpha_ = 0.0;
  double periodic_fraction_ = 0.0;
  int components_ = 1;
  std::shared_ptr<const System> base_;
  unsigned tags_ = 0;
  std::string name_;
};

// T^n(p), plain double arithmetic.  Satisfies
// iterate(s, iterate(s, p, a), b) == iterate(s, p, a + b) exactly.
Point iterate(const System& sys, Point p, std::uint64_t n);

// mu-distributed sample: coordinate uniform on [0,1), label uniform.
Point sample_point(const System& sys, RngStream& rng);

void validate_point(const System& sys, const Point& p);

}  // namespace liyorke
