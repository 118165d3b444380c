#include "entcol/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace entcol {

namespace {

using Real = long double;

Real phi_l(const DescentSet& e, Real x) {
  Real s = 1;
  for (auto f : e.finite_part()) s += std::pow(x, static_cast<Real>(f));
  if (const auto& p = e.progression_part()) s += std::pow(x, static_cast<Real>(p->start)) / (1 - std::pow(x, static_cast<Real>(p->step)));
  return s;
}

Real phi_prime_l(const DescentSet& e, Real x) {
  Real s = 0;
  for (auto f : e.finite_part()) s += f * std::pow(x, static_cast<Real>(f) - 1);
  if (const auto& p = e.progression_part()) {
    const Real a = p->start;
    const Real d = p->step;
    const Real xd = std::pow(x, d);
    s += (a * std::pow(x, a - 1) * (1 - xd) + d * std::pow(x, a + d - 1)) / ((1 - xd) * (1 - xd));
  }
  return s;
}

Real characteristic_l(const DescentSet& e, Real x) {
  Real base = 1;
  for (auto f : e.finite_part()) base += (1 - static_cast<Real>(f)) * std::pow(x, static_cast<Real>(f));
  const auto& p = e.progression_part();
  if (!p) return base;
  const Real a = p->start;
  const Real d = p->step;
  const Real xd = std::pow(x, d);
  return base * (1 - xd) * (1 - xd) + (1 - a) * std::pow(x, a) * (1 - xd) - d * std::pow(x, a + d);
}

}  // namespace

double phi(const DescentSet& e, double x) { return static_cast<double>(phi_l(e, x)); }
double phi_prime(const DescentSet& e, double x) { return static_cast<double>(phi_prime_l(e, x)); }
double characteristic(const DescentSet& e, double x) { return static_cast<double>(characteristic_l(e, x)); }

std::optional<double> radius(const DescentSet& e) {
  if (e.progression_part()) return 1.0;
  return std::nullopt;
}

CharacteristicSolution solve_characteristic(const DescentSet& e) {
  // The characteristic function is 1 at 0. With a progression it is -d at 1;
  // for finite E it decreases without bound once some member exceeds 1.
  Real lo = 0;
  Real hi = 1;
  if (!e.progression_part()) {
    const auto top = e.max_member();
    if (!top || *top < 2) throw InadmissibleSet("descent set " + e.to_string() + " has no characteristic root");
    while (characteristic_l(e, hi) > 0) {
      lo = hi;
      hi *= 2;
      if (hi > 1e12L) throw InadmissibleSet("no sign change found for " + e.to_string());
    }
  }
  Real tau = hi;
  if (characteristic_l(e, hi) != 0) {
    while (true) {
      const Real mid = lo + (hi - lo) / 2;
      if (mid <= lo || mid >= hi) break;
      const Real v = characteristic_l(e, mid);
      if (v == 0) {
        lo = hi = mid;
        break;
      }
      (v > 0 ? lo : hi) = mid;
    }
    tau = characteristic_l(e, lo) < -characteristic_l(e, hi) ? lo : hi;
  }
  CharacteristicSolution sol{e};
  const Real ph = phi_l(e, tau);
  const Real dph = phi_prime_l(e, tau);
  sol.tau = static_cast<double>(tau);
  sol.gamma = static_cast<double>(ph / tau);
  sol.gamma_via_derivative = static_cast<double>(dph);
  sol.residual = static_cast<double>(std::fabs(ph - tau * dph));
  return sol;
}

std::int64_t ceil_snapped(double x) {
  const double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

AcyclicBound acyclic_color_bound(std::size_t delta, std::optional<std::size_t> girth) {
  const double dm1 = delta >= 1 ? static_cast<double>(delta - 1) : 0.0;
  if (girth && *girth < 3) throw std::invalid_argument("girth must be at least 3");
  const auto ell = girth ? static_cast<std::uint32_t>((*girth - 1) / 2) : 0u;
  AcyclicBound out{ell, DescentSet::progression(2 * std::max<std::uint32_t>(2, ell), 2)};
  if (girth) {
    const auto sol = solve_characteristic(out.e);
    out.tau = sol.tau;
    out.gamma = sol.gamma;
  } else {
    out.gamma = 1;
  }
  const auto rank = std::max<std::int64_t>(1, ceil_snapped(out.gamma * dm1));
  out.rank_bound = static_cast<std::uint32_t>(rank);
  out.colors = static_cast<std::uint32_t>(2 * static_cast<std::int64_t>(dm1) + rank);
  return out;
}

double star_constant(std::uint32_t l) {
  const double x = l;
  return x * std::pow(x - 1, 1.0 / x - 1);
}

StarBound star_color_bound(std::size_t delta, std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("star-k bound needs k >= 2");
  const std::uint32_t l = 2 * k - 2;
  const double d = static_cast<double>(delta);
  StarBound out;
  out.exact = star_constant(l) * std::pow(static_cast<double>(k), 1.0 / l) * std::pow(d, (2.0 * k - 1) / l);
  out.rank_bound = static_cast<std::uint32_t>(std::max<std::int64_t>(1, ceil_snapped(out.exact)));
  out.total = out.rank_bound + static_cast<std::uint32_t>(delta);
  return out;
}

ConfigurationFamily star_family() {
  return {"star", DescentSet::finite({1, 2}), [](std::uint32_t ell, double delta) {
            return ell == 1 ? std::log(delta) : std::log(2.0) + 3 * std::log(delta);
          }};
}

ConfigurationFamily nonrepetitive_family() {
  return {"nonrepetitive", DescentSet::progression(1, 1), [](std::uint32_t ell, double delta) {
            return std::log(static_cast<double>(ell)) + (2.0 * ell - 1) * std::log(delta);
          }};
}

ConfigurationFamily acyclic_edge_family() {
  return {"acyclic-edge", DescentSet::join({1}, 2, 2), [](std::uint32_t ell, double delta) {
            return ell == 1 ? std::log(2 * delta) : ell * std::log(delta);
          }};
}

FrameworkBound framework_bound(const ConfigurationFamily& family, double delta, std::uint32_t ell_max) {
  FrameworkBound out;
  out.gamma = solve_characteristic(family.e).gamma;
  for (const auto ell : family.e.members_up_to(ell_max)) {
    const double root = std::exp(family.log_occurrences(ell, delta) / ell);
    if (root > out.sup_root) {
      out.sup_root = root;
      out.argmax = ell;
    }
  }
  out.colors = out.gamma * out.sup_root;
  return out;
}

double steps_threshold(std::size_t m, std::size_t delta) {
  const double d = static_cast<double>(delta);
  return static_cast<double>(m) * std::log(32 * d) / std::log1p(1 / (2 * d));
}

double expected_steps_bound(std::size_t m, std::size_t delta) {
  const double d = static_cast<double>(delta);
  return (static_cast<double>(m) * std::log(32 * d) + 1) / std::log1p(1 / (2 * d));
}

}  // namespace entcol
