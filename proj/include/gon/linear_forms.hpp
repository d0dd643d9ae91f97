#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gon/fp_poly.hpp"
#include "gon/lattice.hpp"

namespace gon {

// |x|^root < value (strict) or |x|^root <= value. The root lets callers state
// bounds such as |x| <= sqrt(d) exactly.
struct Bound {
  Rational value;
  unsigned root = 1;
  bool strict = true;

  // Largest integer X with every |x| <= X admitted.
  Integer limit() const;
  bool admits(const Integer& x) const;
};

struct IntBox {
  std::vector<Bound> bounds;

  // |x_i| < eps_i except |x_k| <= eps_k at the distinguished index k
  // (0-based; defaults to the last coordinate).
  static IntBox from_epsilon(const std::vector<Rational>& eps, std::optional<std::size_t> distinguished = {});
  std::size_t dim() const { return bounds.size(); }
  bool admits(const std::vector<Integer>& x) const;
};

// covol <= prod of the bounds (compared exactly after clearing roots) and at
// least one bound is non-strict: the hypothesis under which a nonzero box
// point must exist.
bool box_guarantee_holds(const IntLattice& lattice, const IntBox& box);

struct SearchOptions {
  std::uint64_t max_nodes = 4'000'000'000ULL;
};

// First nonzero lattice point in the box: coordinates are fixed from the
// last to the first, each level running through its admissible residue class
// ordered 0, 1, -1, 2, -2, ... Absent when the box holds only 0.
std::optional<std::vector<Integer>> solve_box_int(const IntLattice& lattice, const IntBox& box,
                                                  const SearchOptions& opts = {});

// Same search forced onto the multiprecision path (used to cross-check the
// int64 fast path).
std::optional<std::vector<Integer>> solve_box_int_reference(const IntLattice& lattice, const IntBox& box,
                                                            const SearchOptions& opts = {});

// Nonzero x in Lambda with deg x_i <= e_i whenever one exists (exact: the
// solution space is the kernel of B -> R^n / Lambda on the F_p-space B of
// degree-bounded tuples). Guaranteed when deg covol <= n - 1 + sum e.
std::optional<std::vector<FpPoly>> solve_box_poly(const PolyLattice& lattice, const std::vector<long long>& e);

// Nonzero x in F_p[t]^n with deg (C x)_i <= e_i. Rejects (PreconditionError)
// unless deg det C <= n - 1 + sum e.
std::vector<FpPoly> solve_tornheim(std::uint64_t p, const Matrix<RatFunc>& c, const std::vector<long long>& e);

// The point solve_box_int returns, found instead by listing the box points
// in an LLL-reduced basis: fast for long thin boxes whose point count is
// small. Floating point only guides the listing; a miss can at worst yield a
// later (still exactly checked) box point, and an empty listing falls back
// to solve_box_int.
std::optional<std::vector<Integer>> solve_box_int_reduced(const IntLattice& lattice, const IntBox& box,
                                                          const SearchOptions& opts = {});

// congruence_lattice followed by solve_box_int.
std::optional<std::vector<Integer>> solve_congruence_box(const Matrix<Integer>& a, const std::vector<Integer>& moduli,
                                                         const IntBox& box);

// (x_1, ..., x_n, x_{n+1}) with 0 < |x_{n+1}| < M and
// |x_{n+1} theta_i - x_i| <= M^(-1/n). M > 1.
std::vector<Integer> dioph_approx_int(const std::vector<Rational>& theta, const Rational& m);

// (x_1, ..., x_n, x_{n+1}) over F_p[t] with x_{n+1} != 0,
// deg x_{n+1} <= deg_m - 1 and n * deg(x_{n+1} theta_i - x_i) <= -deg_m.
std::vector<FpPoly> dioph_approx_poly(std::uint64_t p, const std::vector<RatFunc>& theta, long long deg_m);

// Nonzero differences s - s' lying in the subgroup generated by `gens` inside
// G = Z/g_1 x ... x Z/g_k, found by bucketing S by coset. Requires
// #S > kappa [G : Lambda] (distinct elements of S counted).
std::vector<std::vector<Integer>> pigeonhole_collisions(const std::vector<Integer>& group,
                                                        const std::vector<std::vector<Integer>>& gens,
                                                        const std::vector<std::vector<Integer>>& s,
                                                        std::size_t kappa);

}  // namespace gon
