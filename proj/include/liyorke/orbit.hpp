#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "liyorke/point.hpp"
#include "liyorke/rng.hpp"
#include "liyorke/system.hpp"

namespace liyorke {

// Lazy bit expansion of a coordinate.  The exact binary digits of the double
// come first; once they are exhausted the tape continues with pseudo-random
// bits keyed on the bit pattern of the starting point.  A double carries only
// ~53 significant bits, so a naively iterated expanding orbit collapses to 0
// after that many steps; the extension keeps long orbits distributed like the
// orbit of a genuine mu-random point while staying a pure function of the
// start point.
class BitTape {
 public:
  BitTape(double x, std::uint64_t salt);

  // 53 bits starting at position pos, as a double in [0,1).
  double window(std::uint64_t pos) const {
    while (filled_ < pos + 128) extend();
    std::uint64_t w = pos >> 6, b = pos & 63;
    std::uint64_t u = words_[w] << b;
    if (b) u |= words_[w + 1] >> (64 - b);
    return double(u >> 11) * 0x1.0p-53;
  }

 private:
  void extend() const;
  mutable std::vector<std::uint64_t> words_;
  mutable std::uint64_t filled_ = 0;  // bits present
  mutable RngStream ext_;
};

// Walks the orbit of one point.  Rotations advance in plain double
// arithmetic; expanding maps (doubling, the expanding part of the periodic
// hybrid) shift a window over a BitTape.
class OrbitWalker {
 public:
  OrbitWalker(const System& sys, Point start);

  Point current() const {
    switch (engine_) {
      case Engine::Fixed:
        return {fixed_, label_};
      case Engine::Rotation:
        return {coord_, label_};
      case Engine::Expanding:
      default:
        return {lo_ + tape_->window(pos_) * width_, label_};
    }
  }

  void step() {
    switch (engine_) {
      case Engine::Fixed:
        break;
      case Engine::Rotation:
        coord_ += alpha_;
        if (coord_ >= 1.0) coord_ -= 1.0;
        break;
      case Engine::Expanding:
        ++pos_;
        break;
    }
    if (label_period_ > 1) {
      ++label_;
      if (label_ == label_period_) label_ = 0;
    }
  }

  void advance(std::uint64_t n);

 private:
  enum class Engine { Fixed, Rotation, Expanding };
  Engine engine_ = Engine::Fixed;
  double alpha_ = 0.0;
  double coord_ = 0.0;        // Rotation
  double fixed_ = 0.0;        // Fixed
  double lo_ = 0.0, width_ = 1.0;  // Expanding affine range
  std::optional<BitTape> tape_;
  std::uint64_t pos_ = 0;
  int label_ = 0;
  int label_period_ = 1;
};

// d(T^n p, T^n q) for n = 0 .. horizon-1.  Defined in analysis.cpp.
class Metric;
std::vector<double> orbit_distances(const System& sys, const Metric& metric,
                                    Point p, Point q, std::uint64_t horizon);

}  // namespace liyorke
