#pragma once

// Reproducible random affine-fractional instances.
//
// The stream is xoshiro256** seeded by four successive splitmix64 outputs of
// the 64-bit seed; a uniform real in [0,1) is (next() >> 11)·2⁻⁵³. Each
// instance draws, in order: A row-major, b, A₁ row-major, b₁, c, d. Rejected
// draws are not rewound, so the output depends only on the config.
//
// Independent batches should use seed + batch index.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qep/bifunction.hpp"

namespace qep {

/// One splitmix64 step: advances state and returns the mixed output.
std::uint64_t splitmix64_next(std::uint64_t& state) noexcept;

class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept;

  result_type operator()() noexcept;
  /// (next() >> 11)·2⁻⁵³, in [0, 1).
  double uniform01() noexcept;
  double uniform(double low, double high) noexcept { return low + (high - low) * uniform01(); }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

 private:
  std::uint64_t s_[4];
};

struct GeneratorConfig {
  std::size_t n = 5;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double entry_low = 0.0;
  double entry_high = 1.0;
  double box_low = 1.0;
  double box_high = 3.0;
  bool require_paramonotone = false;
  std::size_t max_rejections = 10000;

  /// Throws ConfigError on an empty dimension or inverted ranges.
  void validate() const;
};

struct GenerationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

/// Throws GenerationError once more than max_rejections draws are discarded.
std::vector<AffineFractionalInstance> generate_instances(const GeneratorConfig& config,
                                                         GenerationStats* stats = nullptr);

}  // namespace qep
