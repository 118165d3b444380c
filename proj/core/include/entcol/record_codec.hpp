#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "entcol/bigint.hpp"
#include "entcol/descent_set.hpp"

namespace entcol {

/// A step that closed a 2-colored cycle of length 2k; `ell` indexes that
/// cycle among the cycles of length 2k through the edge colored at the step.
struct CycleConflict {
  std::uint32_t k = 0;
  BigInt ell;

  friend bool operator==(const CycleConflict&, const CycleConflict&) = default;
};

/// nullopt is an empty entry (the step colored an edge without conflict).
using RecordEntry = std::optional<CycleConflict>;
using Record = std::vector<RecordEntry>;

/// Symbols over {0} ∪ {1..Δ-1}: each record entry is a 0 followed by the
/// digits of its cycle index.
using RecordWord = std::vector<std::uint32_t>;

/// Binary word as a string of '0' and '1'.
using DyckWord = std::string;

class CodecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixed-radix cycle index: theta(w) = 1 + sum_i (w_i - 1) * base^(i-1), with
// w_1 the least significant digit and every w_i in {1..base}.
BigInt theta_encode(std::span<const std::uint32_t> word, std::uint32_t base);
std::vector<std::uint32_t> theta_decode(const BigInt& ell, std::size_t length, std::uint32_t base);

/// Number of distinct indices for a word of `length` digits: base^length.
BigInt theta_range(std::size_t length, std::uint32_t base);

/// R -> R•. Throws CodecError when an index is out of range for (k, Δ).
RecordWord expand_record(const Record& record, std::size_t delta);

/// Inverse of expand_record.
Record parse_record_word(const RecordWord& word, std::size_t delta);

/// Symbol-wise 0 -> '0', nonzero -> '1'.
DyckWord to_dyck(const RecordWord& word);

/// Same word built straight from uncolored counts per step (0 for a clean
/// step, the number of uncolored elements otherwise).
DyckWord dyck_from_uncolor_counts(std::span<const std::uint32_t> counts);

bool is_partial_dyck(const DyckWord& w);
bool is_full_dyck(const DyckWord& w);
/// (#0 - #1) over the whole word.
long long imbalance(const DyckWord& w);

struct DescentReport {
  bool ok = true;
  std::size_t offset = 0;  ///< start of the first offending descent
  std::size_t length = 0;  ///< its length
  std::string reason;
};

/// Every maximal run of 1's must be even and at least max(4, 2*girth_param).
DescentReport check_descents(const DyckWord& w, std::uint32_t girth_param);

/// Lengths of the maximal runs of 1's, in order.
std::vector<std::size_t> descent_lengths(const DyckWord& w);

/// Appends (0^(s-1) 1^s)^r, where r = #0 - #1 and s = min(E \ {1}). The
/// input must be a partial Dyck word.
DyckWord pad_to_full(const DyckWord& w, const DescentSet& e);

/// Debug views: R* with entries separated by '|', and R• concatenated.
/// Symbols >= 10 are written in parentheses.
std::string format_entries(const Record& record, std::size_t delta);
std::string format_word(const RecordWord& word);

}  // namespace entcol
