#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace entcol {

/// Set of allowed descent lengths: a finite part, optionally joined with an
/// arithmetic progression {start + step*i : i >= 0}.
///
/// Every member is >= 1, the set is nonempty and it is not {1}.
class DescentSet {
 public:
  struct Progression {
    std::uint32_t start;
    std::uint32_t step;
  };

  static DescentSet finite(std::vector<std::uint32_t> members);
  static DescentSet progression(std::uint32_t start, std::uint32_t step);
  static DescentSet join(std::vector<std::uint32_t> members, std::uint32_t start, std::uint32_t step);

  /// "{a,b,c}", "2N+4", "N+1", or a union such as "{1}|2N+2" ("∪" and "U" also
  /// separate the parts).
  static DescentSet parse(std::string_view text);

  bool contains(std::uint64_t x) const;
  bool is_finite() const noexcept { return !progression_.has_value(); }

  /// Finite members not already covered by the progression, ascending.
  const std::vector<std::uint32_t>& finite_part() const noexcept { return finite_; }
  const std::optional<Progression>& progression_part() const noexcept { return progression_; }

  /// All members <= bound, ascending.
  std::vector<std::uint32_t> members_up_to(std::uint64_t bound) const;

  std::uint32_t min_member() const;
  /// min(E \ {1}); exists by the class invariant.
  std::uint32_t min_non_unit() const;
  /// Largest finite member; nullopt when a progression is present.
  std::optional<std::uint32_t> max_member() const;
  /// gcd of all members: Dyck words with descents in E have length 2t with
  /// t a multiple of this.
  std::uint32_t period() const;

  std::string to_string() const;

  friend bool operator==(const DescentSet& a, const DescentSet& b) {
    return a.finite_ == b.finite_ && a.progression_.has_value() == b.progression_.has_value() &&
           (!a.progression_ || (a.progression_->start == b.progression_->start &&
                                a.progression_->step == b.progression_->step));
  }

 private:
  DescentSet(std::vector<std::uint32_t> finite, std::optional<Progression> prog);

  std::vector<std::uint32_t> finite_;
  std::optional<Progression> progression_;
};

class DescentSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace entcol
