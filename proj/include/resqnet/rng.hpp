#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace resqnet {

/// Seedable generator with a platform-stable output stream. std::mt19937_64 is
/// fully specified by the standard; the distributions are not, so uniform
/// draws are computed here from the raw 64-bit words.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a64(std::string_view text);
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for an independent stream identified by the root seed and a list of
/// labels, e.g. {experiment name, cell, purpose}.
std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::string_view> labels);

} // namespace resqnet
