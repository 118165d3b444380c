#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "entcol/bounds.hpp"
#include "entcol/dyck.hpp"

using namespace entcol;

namespace {

BigInt binomial(std::uint32_t n, std::uint32_t k) {
  BigInt r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

BigInt catalan(std::uint32_t t) { return binomial(2 * t, t) / (t + 1); }

// Preorder out-degree sequences of plane trees on `vertices` vertices with
// every nonzero degree in E.
void plane_trees(std::uint32_t vertices, const DescentSet& e, std::vector<std::uint32_t>& seq, long long open,
                 std::vector<std::vector<std::uint32_t>>& out) {
  if (seq.size() == vertices) {
    if (open == 0) out.push_back(seq);
    return;
  }
  if (open <= 0) return;
  const long long left = static_cast<long long>(vertices - seq.size());
  for (std::uint32_t d = 0; d < vertices; ++d) {
    if (d != 0 && !e.contains(d)) continue;
    if (open - 1 + d > left - 1) break;
    seq.push_back(d);
    plane_trees(vertices, e, seq, open - 1 + d, out);
    seq.pop_back();
  }
}

bool descents_in(const DyckWord& w, const DescentSet& e) {
  for (auto len : descent_lengths(w))
    if (!e.contains(len)) return false;
  return true;
}

const char* const kSets[] = {"2N+4", "2N+6", "{2}", "{3}", "{4}", "{1}|2N+2", "N+1", "{2,3}", "{1,4}"};

}  // namespace

TEST_SUITE("dyck") {

TEST_CASE("small values") {
  for (const char* text : kSets) {
    const auto e = DescentSet::parse(text);
    CHECK(count_dyck(0, e) == 1);
    CHECK(count_dyck_lagrange(0, e) == 1);
    CHECK(count_partial_dyck(0, 0, e) == 1);
  }
  const auto e4 = DescentSet::parse("2N+4");
  CHECK(count_dyck(4, e4) == 1);
  CHECK(count_dyck(8, e4) == 5);
  CHECK(count_dyck_lagrange(8, e4) == 5);
  CHECK(count_dyck(5, e4) == 0);
  CHECK(count_dyck(4, DescentSet::parse("{2}")) == 2);
  CHECK(count_dyck(6, DescentSet::parse("N+1")) == catalan(6));
}

TEST_CASE("enumeration of tiny cases") {
  CHECK(enumerate_dyck(4, DescentSet::parse("{2}")) == std::vector<DyckWord>{"00011011", "00110011"});
  CHECK(enumerate_dyck(3, DescentSet::parse("{3}")) == std::vector<DyckWord>{"000111"});
  CHECK(enumerate_dyck(0, DescentSet::parse("{3}")) == std::vector<DyckWord>{""});
  CHECK(enumerate_dyck(8, DescentSet::parse("2N+4")).size() == 5);
  CHECK_THROWS_AS(enumerate_dyck(14, DescentSet::parse("N+1"), 1000), EnumerationLimit);
  CHECK_THROWS_AS(DescentSet::parse("{1}"), DescentSetError);
}

TEST_CASE("three counting routes and enumeration agree") {
  for (const char* text : kSets) {
    const auto e = DescentSet::parse(text);
    const auto tree = count_dyck_table(120, e);
    const auto lag = count_dyck_lagrange_table(120, e);
    const auto walk = count_dyck_walk_table(120, e);
    CHECK(tree == lag);
    CHECK(tree == walk);
    for (std::uint32_t t = 0; t <= 10; ++t) {
      const auto words = enumerate_dyck(t, e);
      CHECK(BigInt(words.size()) == tree[t]);
      CHECK(std::is_sorted(words.begin(), words.end()));
      for (const auto& w : words) {
        CHECK(is_full_dyck(w));
        CHECK(descents_in(w, e));
      }
    }
    for (std::uint32_t t = 0; t <= 120; ++t) CHECK(tree[t] <= catalan(t));
  }
}

TEST_CASE("single-length sets have a closed form") {
  for (std::uint32_t l = 2; l <= 6; ++l) {
    const auto e = DescentSet::finite({l});
    const auto table = count_dyck_table(150, e);
    for (std::uint32_t t = 0; t <= 150; ++t) {
      const BigInt want = t % l ? BigInt(0) : binomial(t + 1, t / l) / (t + 1);
      CHECK(table[t] == want);
    }
  }
}

TEST_CASE("plane trees biject onto descent-constrained words") {
  for (const char* text : {"2N+4", "{2}", "{2,3}", "{1}|2N+2", "N+1"}) {
    const auto e = DescentSet::parse(text);
    for (std::uint32_t t = 0; t <= 9; ++t) {
      std::vector<std::vector<std::uint32_t>> trees;
      std::vector<std::uint32_t> seq;
      plane_trees(t + 1, e, seq, 1, trees);
      std::set<DyckWord> images;
      for (const auto& tree : trees) {
        const auto w = plane_tree_word(tree);
        CHECK(is_full_dyck(w));
        images.insert(mirror_swap(w));
      }
      CHECK(images.size() == trees.size());
      const auto words = enumerate_dyck(t, e);
      CHECK(std::set<DyckWord>(words.begin(), words.end()) == images);
    }
  }
}

TEST_CASE("partial counts") {
  for (const char* text : {"2N+4", "{2}", "{4}", "{1}|2N+2"}) {
    const auto e = DescentSet::parse(text);
    const auto full = count_dyck_table(60, e);
    const std::uint32_t s = e.min_non_unit();
    for (std::uint32_t t = 0; t <= 12; ++t) {
      CHECK(count_partial_dyck(t, t, e) == 1);
      CHECK(count_partial_dyck(t, 0, e) == full[t]);
      for (std::uint32_t r = 0; r <= t; ++r) CHECK(count_partial_dyck(t, r, e) <= full[t + r * (s - 1)]);
    }
  }
  CHECK_THROWS_AS(count_partial_dyck(3, 4, DescentSet::parse("{2}")), std::invalid_argument);
}

TEST_CASE("normalized counts stay bounded") {
  for (const char* text : {"2N+4", "2N+6", "{2}", "{1}|2N+2"}) {
    const auto e = DescentSet::parse(text);
    const double gamma = solve_characteristic(e).gamma;
    const auto table = count_dyck_walk_table(600, e);
    double first = 0;
    double second = 0;
    for (std::uint32_t t = 50; t <= 600; ++t) {
      if (table[t].is_zero()) continue;
      const double v = std::exp(log_big(table[t]) - t * std::log(gamma) + 1.5 * std::log(static_cast<double>(t)));
      (t <= 300 ? first : second) = std::max(t <= 300 ? first : second, v);
    }
    CHECK(second <= first * 1.02);
  }
}

TEST_CASE("growth ratios approach gamma") {
  const auto two = growth_ratio(DescentSet::parse("{2}"), 400);
  REQUIRE_FALSE(two.empty());
  CHECK(two.back().period == 2);
  CHECK(two.back().corrected == doctest::Approx(2.0).epsilon(1e-3));
  const auto four = growth_ratio(DescentSet::parse("2N+4"), 400);
  CHECK(four.back().corrected == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(four.back().per_step < four.back().corrected);
}

}
