#include "liyorke/orbit.hpp"

#include <bit>
#include <cmath>

namespace liyorke {

BitTape::BitTape(double x, std::uint64_t salt)
    : ext_(std::bit_cast<std::uint64_t>(x) ^ RngStream::mix(salt),
           stream_id(stream_tag::kTape, 0)) {
  // exact binary digits of x first (doubling and halving are exact)
  std::uint64_t cur = 0;
  int curbits = 0;
  double y = x;
  while (y != 0.0 && filled_ < 1088) {
    y += y;
    int bit = y >= 1.0;
    if (bit) y -= 1.0;
    cur = (cur << 1) | std::uint64_t(bit);
    ++curbits;
    ++filled_;
    if (curbits == 64) {
      words_.push_back(cur);
      cur = 0;
      curbits = 0;
    }
  }
  if (curbits) words_.push_back(cur << (64 - curbits));
  // Pad with exact zero digits out to the 2^-53 sampling grid.  The random
  // extension must start at a position that does not depend on the digits
  // themselves: starting it at the last set bit would overwrite the trailing
  // zeros that grid-valued samples genuinely have, biasing tape bits near
  // position 53 towards 1 and skewing every long-horizon statistic.
  if (filled_ < 53) {
    if (words_.empty()) words_.push_back(0);
    filled_ = 53;
  }
}

void BitTape::extend() const {
  std::uint64_t r = ext_.next_u64();
  std::uint64_t rem = filled_ & 63;
  if (rem) {
    words_.back() |= r >> rem;
    filled_ += 64 - rem;
  } else {
    words_.push_back(r);
    filled_ += 64;
  }
}

OrbitWalker::OrbitWalker(const System& sys, Point start) {
  validate_point(sys, start);
  label_ = start.label;
  label_period_ = sys.component_count();
  const System& base =
      sys.kind() == SystemKind::ProductWithFiniteRotation ? sys.base() : sys;
  switch (base.kind()) {
    case SystemKind::IrrationalRotation:
      engine_ = Engine::Rotation;
      alpha_ = base.alpha();
      coord_ = start.coord;
      break;
    case SystemKind::DoublingMap:
      engine_ = Engine::Expanding;
      lo_ = 0.0;
      width_ = 1.0;
      tape_.emplace(start.coord, 0x5ca1ab1eull);
      break;
    case SystemKind::PeriodicHybrid: {
      double f = base.periodic_fraction();
      if (start.coord < f) {
        engine_ = Engine::Fixed;
        fixed_ = start.coord;
      } else {
        engine_ = Engine::Expanding;
        lo_ = f;
        width_ = 1.0 - f;
        double y = (start.coord - f) / width_;
        if (y >= 1.0) y = std::nextafter(1.0, 0.0);
        tape_.emplace(y, 0x5ca1ab1eull);
      }
      break;
    }
    case SystemKind::Identity:
    default:
      engine_ = Engine::Fixed;
      fixed_ = start.coord;
      break;
  }
}

void OrbitWalker::advance(std::uint64_t n) {
  switch (engine_) {
    case Engine::Fixed:
      break;
    case Engine::Rotation: {
      coord_ += std::fmod(double(n) * alpha_, 1.0);
      if (coord_ >= 1.0) coord_ -= 1.0;
      break;
    }
    case Engine::Expanding:
      pos_ += n;
      break;
  }
  if (label_period_ > 1)
    label_ = int((std::uint64_t(label_) + n) % std::uint64_t(label_period_));
}

}  // namespace liyorke
