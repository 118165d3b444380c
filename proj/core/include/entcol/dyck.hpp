#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "entcol/bigint.hpp"
#include "entcol/descent_set.hpp"
#include "entcol/record_codec.hpp"

namespace entcol {

// Counting Dyck words of length 2t whose descents (maximal runs of 1's)
// all have length in E. Three independent routes are provided: plane-tree
// convolution, Lagrange inversion, and a walk over word prefixes. They must
// agree; the tests hold them to it.

/// C_{t,E} via plane trees on t+1 vertices with out-degrees in E ∪ {0}.
BigInt count_dyck(std::uint32_t t, const DescentSet& e);

/// C_{0,E}..C_{t_max,E} via the same recurrence.
std::vector<BigInt> count_dyck_table(std::uint32_t t_max, const DescentSet& e);

/// (1/(t+1)) [x^t] φ_E(x)^(t+1).
BigInt count_dyck_lagrange(std::uint32_t t, const DescentSet& e);
std::vector<BigInt> count_dyck_lagrange_table(std::uint32_t t_max, const DescentSet& e);

/// C_{t,r,E}: partial Dyck words with t 0's and t-r 1's, descents in E.
BigInt count_partial_dyck(std::uint32_t t, std::uint32_t r, const DescentSet& e);

/// C_{t,E} for every t <= t_max from the prefix walk (r = 0 of the above).
std::vector<BigInt> count_dyck_walk_table(std::uint32_t t_max, const DescentSet& e);

class EnumerationLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Every Dyck word of length 2t with descents in E, in lexicographic order.
/// Throws EnumerationLimit when the count exceeds `limit`.
std::vector<DyckWord> enumerate_dyck(std::uint32_t t, const DescentSet& e, std::uint64_t limit = 1'000'000);

/// Word of a rooted plane tree given by its preorder out-degree sequence:
/// every vertex but the last contributes 0^deg 1.
DyckWord plane_tree_word(std::span<const std::uint32_t> preorder_degrees);

/// Reverses the word and swaps 0 and 1.
DyckWord mirror_swap(const DyckWord& w);

struct GrowthRatio {
  std::uint32_t t = 0;       ///< ratio compares C_{t+period} with C_t
  std::uint32_t period = 1;
  BigInt numerator;          ///< C_{t+period}
  BigInt denominator;        ///< C_t
  double per_step = 0;       ///< (C_{t+p}/C_t)^(1/p)
  /// per_step with the t^(-3/2) polynomial factor divided out:
  /// per_step * ((t+p)/t)^(3/(2p)).
  double corrected = 0;
};

/// Ratios of consecutive nonzero counts along multiples of E's period, for
/// t up to t_max. Counts come from the prefix walk.
std::vector<GrowthRatio> growth_ratio(const DescentSet& e, std::uint32_t t_max);

}  // namespace entcol
