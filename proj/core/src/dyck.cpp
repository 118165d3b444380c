#include "entcol/dyck.hpp"

#include <algorithm>
#include <cmath>

namespace entcol {

namespace {

// Exponents whose power series the tree recurrence needs, limited to `cap`
// (X^j has no terms below degree j).
std::uint32_t largest_power(const DescentSet& e, std::uint32_t cap) {
  std::uint32_t j = 1;
  for (auto f : e.finite_part())
    if (f <= cap) j = std::max(j, f);
  if (const auto& p = e.progression_part(); p && p->start <= cap) {
    j = std::max(j, p->start);
    if (p->step <= cap) j = std::max(j, p->step);
  }
  return j;
}

}  // namespace

std::vector<BigInt> count_dyck_table(std::uint32_t t_max, const DescentSet& e) {
  // X(z) = sum_n T[n] z^n counts trees by vertices and satisfies
  // X = z (1 + S) with S = sum_{i in E} X^i. For the progression part,
  // G = X^a/(1 - X^d) obeys G = X^a + X^d G.
  const std::uint32_t top = t_max + 1;
  const std::uint32_t max_pow = largest_power(e, top);
  std::vector<std::vector<BigInt>> power(max_pow + 1, std::vector<BigInt>(top + 1));
  std::vector<BigInt> tree(top + 1);
  std::vector<BigInt> children(top + 1);  // S
  std::vector<BigInt> tail(top + 1);      // G
  const auto& prog = e.progression_part();
  const bool prog_live = prog && prog->start <= top;

  for (std::uint32_t n = 1; n <= top; ++n) {
    tree[n] = n == 1 ? BigInt(1) : children[n - 1];
    power[1][n] = tree[n];
    for (std::uint32_t j = 2; j <= max_pow; ++j) {
      BigInt acc = 0;
      for (std::uint32_t s = 1; s + (j - 1) <= n; ++s)
        if (!tree[s].is_zero() && !power[j - 1][n - s].is_zero()) acc += tree[s] * power[j - 1][n - s];
      power[j][n] = std::move(acc);
    }
    BigInt s_n = 0;
    for (auto f : e.finite_part())
      if (f <= max_pow) s_n += power[f][n];
    if (prog_live) {
      BigInt g = power[prog->start][n];
      if (prog->step <= max_pow)
        for (std::uint32_t m = prog->step; m < n; ++m)
          if (!power[prog->step][m].is_zero() && !tail[n - m].is_zero()) g += power[prog->step][m] * tail[n - m];
      s_n += g;
      tail[n] = std::move(g);
    }
    children[n] = std::move(s_n);
  }
  std::vector<BigInt> out(t_max + 1);
  for (std::uint32_t t = 0; t <= t_max; ++t) out[t] = tree[t + 1];
  return out;
}

BigInt count_dyck(std::uint32_t t, const DescentSet& e) { return count_dyck_table(t, e)[t]; }

std::vector<BigInt> count_dyck_lagrange_table(std::uint32_t t_max, const DescentSet& e) {
  const std::size_t len = static_cast<std::size_t>(t_max) + 1;
  std::vector<BigInt> poly(len);  // φ^j truncated at degree t_max
  poly[0] = 1;
  std::vector<BigInt> next(len);
  std::vector<BigInt> geo(len);
  const auto& prog = e.progression_part();
  std::vector<BigInt> out(len);
  for (std::uint32_t j = 1; j <= t_max + 1; ++j) {
    // next = poly * φ, with φ = 1 + sum_F x^f + x^a / (1 - x^d).
    for (std::size_t n = 0; n < len; ++n) {
      BigInt acc = poly[n];
      for (auto f : e.finite_part())
        if (f <= n) acc += poly[n - f];
      if (prog) {
        BigInt g = 0;
        if (prog->start <= n) g += poly[n - prog->start];
        if (prog->step <= n) g += geo[n - prog->step];
        acc += g;
        geo[n] = std::move(g);
      }
      next[n] = std::move(acc);
    }
    std::swap(poly, next);
    const std::uint32_t t = j - 1;
    BigInt q;
    BigInt rem;
    boost::multiprecision::divide_qr(poly[t], BigInt(j), q, rem);
    if (!rem.is_zero()) throw std::logic_error("Lagrange coefficient not divisible by t+1");
    out[t] = std::move(q);
  }
  return out;
}

BigInt count_dyck_lagrange(std::uint32_t t, const DescentSet& e) { return count_dyck_lagrange_table(t, e)[t]; }

namespace {

// Rolls the prefix walk over rows a = #0's. After row a, `ending_zero[b]`
// and `ending_descent[b]` count valid prefixes with a 0's and b 1's whose
// last symbol is a 0 (or the empty word) or closes a descent.
class PrefixWalk {
 public:
  explicit PrefixWalk(const DescentSet& e) : e_(e), ending_zero_{1}, ending_descent_{0} {}

  void advance() {
    ++row_;
    std::vector<BigInt> zero(row_ + 1);
    for (std::size_t b = 0; b < row_; ++b) zero[b] = ending_zero_[b] + ending_descent_[b];
    std::vector<BigInt> descent(row_ + 1);
    std::vector<BigInt> geo(row_ + 1);
    const auto& prog = e_.progression_part();
    for (std::size_t b = 1; b <= row_; ++b) {
      BigInt acc = 0;
      for (auto f : e_.finite_part())
        if (f <= b) acc += zero[b - f];
      if (prog) {
        BigInt g = 0;
        if (prog->start <= b) g += zero[b - prog->start];
        if (prog->step <= b) g += geo[b - prog->step];
        acc += g;
        geo[b] = std::move(g);
      }
      descent[b] = std::move(acc);
    }
    ending_zero_ = std::move(zero);
    ending_descent_ = std::move(descent);
  }

  std::size_t row() const { return row_; }
  BigInt total(std::size_t ones) const { return ending_zero_[ones] + ending_descent_[ones]; }

 private:
  const DescentSet& e_;
  std::size_t row_ = 0;
  std::vector<BigInt> ending_zero_;
  std::vector<BigInt> ending_descent_;
};

}  // namespace

BigInt count_partial_dyck(std::uint32_t t, std::uint32_t r, const DescentSet& e) {
  if (r > t) throw std::invalid_argument("count_partial_dyck needs r <= t");
  PrefixWalk walk(e);
  while (walk.row() < t) walk.advance();
  return walk.total(t - r);
}

std::vector<BigInt> count_dyck_walk_table(std::uint32_t t_max, const DescentSet& e) {
  std::vector<BigInt> out;
  out.reserve(t_max + 1);
  PrefixWalk walk(e);
  out.push_back(walk.total(0));
  while (walk.row() < t_max) {
    walk.advance();
    out.push_back(walk.total(walk.row()));
  }
  return out;
}

namespace {

void enumerate_into(std::uint32_t t, const std::vector<std::uint32_t>& lengths, DyckWord& word, std::uint32_t zeros,
                    std::uint32_t ones, std::vector<DyckWord>& out) {
  if (zeros == t && ones == t) {
    out.push_back(word);
    return;
  }
  if (zeros < t) {
    word.push_back('0');
    enumerate_into(t, lengths, word, zeros + 1, ones, out);
    word.pop_back();
  }
  if (word.empty() || word.back() != '0') return;
  for (auto f : lengths) {
    if (ones + f > zeros) break;
    word.append(f, '1');
    enumerate_into(t, lengths, word, zeros, ones + f, out);
    word.resize(word.size() - f);
  }
}

}  // namespace

std::vector<DyckWord> enumerate_dyck(std::uint32_t t, const DescentSet& e, std::uint64_t limit) {
  const BigInt count = count_dyck(t, e);
  if (count > limit) throw EnumerationLimit("enumeration of " + count.str() + " words exceeds the limit of " + std::to_string(limit));
  std::vector<DyckWord> out;
  out.reserve(static_cast<std::size_t>(count));
  DyckWord word;
  enumerate_into(t, e.members_up_to(t), word, 0, 0, out);
  return out;
}

DyckWord plane_tree_word(std::span<const std::uint32_t> preorder_degrees) {
  DyckWord out;
  for (std::size_t i = 0; i + 1 < preorder_degrees.size(); ++i) {
    out.append(preorder_degrees[i], '0');
    out.push_back('1');
  }
  return out;
}

DyckWord mirror_swap(const DyckWord& w) {
  DyckWord out(w.rbegin(), w.rend());
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

std::vector<GrowthRatio> growth_ratio(const DescentSet& e, std::uint32_t t_max) {
  const auto counts = count_dyck_walk_table(t_max, e);
  const std::uint32_t p = e.period();
  std::vector<GrowthRatio> out;
  for (std::uint32_t t = p; t + p <= t_max; t += p) {
    if (counts[t].is_zero() || counts[t + p].is_zero()) continue;
    GrowthRatio g;
    g.t = t;
    g.period = p;
    g.numerator = counts[t + p];
    g.denominator = counts[t];
    const double ratio = ratio_to_double(g.numerator, g.denominator);
    g.per_step = std::pow(ratio, 1.0 / p);
    g.corrected = g.per_step * std::pow(static_cast<double>(t + p) / t, 1.5 / p);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace entcol
