#pragma once

#include <cstdint>
#include <numeric>

namespace liyorke {

// Exact-rational orbit mode for the doubling map.  Doubling is exactly
// computable on rationals, which anchors the frozen expected values used by
// the tests on rational starting points.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  void reduce() {
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  double value() const { return double(num) / double(den); }
};

inline Rational doubling_step_exact(Rational r) {
  Rational out{(2 * r.num) % r.den, r.den};
  out.reduce();
  return out;
}

// Normalized circle distance |a - b| on R/Z, exact.
inline Rational circle_distance_exact(Rational a, Rational b) {
  std::int64_t den = a.den * b.den;
  std::int64_t diff = a.num * b.den - b.num * a.den;
  if (diff < 0) diff = -diff;
  diff %= den;
  if (2 * diff > den) diff = den - diff;
  Rational out{diff, den};
  out.reduce();
  return out;
}

}  // namespace liyorke
