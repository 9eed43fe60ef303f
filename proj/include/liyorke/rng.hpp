#pragma once

#include <cstdint>

namespace liyorke {

// Counter-derived substreams: equal (seed, stream) pairs always reproduce the
// same draw sequence, distinct streams are statistically independent.  Based
// on splitmix64, which is cheap and fully portable.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^
                   mix(stream + 0x6a09e667f3bcc909ull))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix(state_);
  }

  // Uniform on [0,1) with 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Stream ids are namespaced per operation so that, e.g., density pair i and
// sensitivity pair i never share draws.
constexpr std::uint64_t stream_id(std::uint64_t op_tag, std::uint64_t index) {
  return (op_tag << 48) ^ index;
}

namespace stream_tag {
constexpr std::uint64_t kDensity = 1;
constexpr std::uint64_t kSensitivity = 2;
constexpr std::uint64_t kCoverage = 3;
constexpr std::uint64_t kScrambled = 4;
constexpr std::uint64_t kSpectral = 5;
constexpr std::uint64_t kCompatibility = 6;
constexpr std::uint64_t kIsometry = 7;
constexpr std::uint64_t kHarness = 8;
constexpr std::uint64_t kTape = 9;
}  // namespace stream_tag

}  // namespace liyorke
