#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace entcol {

/// Seeded source of ranks. Built on std::mt19937_64, whose output sequence is
/// fixed by the standard; bounded draws use rejection sampling so results do
/// not depend on the library's distribution implementations.
class RankSource {
 public:
  explicit RankSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform value in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform rank in {1..bound}.
  std::uint32_t rank(std::uint32_t bound) { return static_cast<std::uint32_t>(below(bound)) + 1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace entcol
