#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entcol/descent_set.hpp"

namespace entcol {

class InadmissibleSet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// φ_E(x) = 1 + sum_{i in E} x^i and its derivative, for 0 <= x < R.
double phi(const DescentSet& e, double x);
double phi_prime(const DescentSet& e, double x);

/// φ_E(x) - x φ'_E(x), cleared of the (1 - x^d)^2 denominator when E has a
/// progression with step d. For E = 2N+2k this is
/// (2k-3)x^(2k+2) + (1-2k)x^(2k) + x^4 - 2x^2 + 1.
double characteristic(const DescentSet& e, double x);

/// Radius of convergence of φ_E: 1 with a progression, infinite otherwise.
std::optional<double> radius(const DescentSet& e);

struct CharacteristicSolution {
  DescentSet e;
  double tau = 0;
  double gamma = 0;                  ///< φ_E(τ)/τ
  double gamma_via_derivative = 0;   ///< φ'_E(τ)
  double residual = 0;               ///< |φ_E(τ) - τ φ'_E(τ)|
};

/// Unique root τ of φ_E - x φ'_E in (0, R) by bisection down to adjacent
/// doubles. Throws InadmissibleSet when no sign change exists (E = {1}).
CharacteristicSolution solve_characteristic(const DescentSet& e);

/// ceil(x), except that values within a relative 1e-9 of an integer snap to
/// it. Keeps exact algebraic bounds (γ = 2, 2√2·Δ^(3/2) with 2Δ square)
/// from being pushed up by rounding noise.
std::int64_t ceil_snapped(double x);

struct AcyclicBound {
  std::uint32_t girth_param = 0;  ///< ℓ = floor((g-1)/2)
  DescentSet e;
  double tau = 0;
  double gamma = 0;
  std::uint32_t colors = 0;       ///< K = ceil((2+γ)(Δ-1))
  std::uint32_t rank_bound = 0;   ///< ceil(γ(Δ-1))
};

/// Colors sufficient for an acyclic edge coloring of a graph with maximum
/// degree Δ >= 2 and the given girth (nullopt: forest, girth_param 0). E = 2N+2k with
/// k = max(2, ℓ). For forests the limit γ = 1 is used.
AcyclicBound acyclic_color_bound(std::size_t delta, std::optional<std::size_t> girth);

struct StarBound {
  std::uint32_t rank_bound = 0;  ///< ceil(C_{2k-2} k^(1/(2k-2)) Δ^((2k-1)/(2k-2)))
  std::uint32_t total = 0;       ///< rank_bound + Δ
  double exact = 0;              ///< the irrational term before ceiling
};

/// C_l = l (l-1)^(1/l - 1).
double star_constant(std::uint32_t l);

StarBound star_color_bound(std::size_t delta, std::uint32_t k);

/// Forbidden-configuration family: the descent set E (one member per
/// uncolored-count ℓ) with ln d_ℓ(Δ), the log of the per-vertex
/// occurrence bound.
struct ConfigurationFamily {
  std::string name;
  DescentSet e;
  std::function<double(std::uint32_t ell, double delta)> log_occurrences;
};

ConfigurationFamily star_family();            ///< ℓ=1: Δ; ℓ=2: 2Δ^3
ConfigurationFamily nonrepetitive_family();   ///< ℓ=i: iΔ^(2i-1), E = N+1
ConfigurationFamily acyclic_edge_family();    ///< ℓ=1: 2Δ; ℓ=2i-2: Δ^(2i-2)

struct FrameworkBound {
  double gamma = 0;
  double sup_root = 0;      ///< sup_ℓ d_ℓ^(1/ℓ) over ℓ <= ell_max
  std::uint32_t argmax = 0;
  double colors = 0;        ///< γ * sup_root
};

/// γ · sup_{ℓ in E} d_ℓ^(1/ℓ); infinite E is scanned up to ell_max.
FrameworkBound framework_bound(const ConfigurationFamily& family, double delta, std::uint32_t ell_max = 4096);

/// (m ln(32Δ) + 1) / ln(1 + 1/(2Δ)): bound on the mean number of steps with
/// K = 4Δ - 3 colors.
double expected_steps_bound(std::size_t m, std::size_t delta);

/// m ln(32Δ) / ln(1 + 1/(2Δ)).
double steps_threshold(std::size_t m, std::size_t delta);

}  // namespace entcol
