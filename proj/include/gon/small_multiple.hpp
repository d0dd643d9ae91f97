#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gon/lattice.hpp"
#include "gon/quadform.hpp"

namespace gon {

enum class HypothesisRoute { H1, H2, DirectHyperbolicWitness };

std::string route_name(HypothesisRoute r);

// root^2 = (-1)^(n/2) d(q) mod prime^exponent, where d(q) = disc f / 2^n is
// the determinant of the form's symmetric matrix (2 is invertible mod odd d).
template <class Elem>
struct PrimePowerWitness {
  Elem prime;
  unsigned exponent = 0;
  Elem root;
};

template <class Elem>
struct HypothesisReport {
  bool holds = false;
  std::optional<HypothesisRoute> route;
  std::vector<PrimePowerWitness<Elem>> details;
  std::string reason;  // why it fails, when it does
};

// Throws PreconditionError for n odd, d even, gcd(d, disc f) != 1 or a
// degenerate form; InvalidArgument for d = 0 or characteristic 2.
HypothesisReport<Integer> check_hypothesis_H(const IntForm& f, const Integer& d);
HypothesisReport<FpPoly> check_hypothesis_H(const PolyForm& f, const FpPoly& d);

// Hyperbolic basis of f mod prime^exponent: f(e_i) = f(f_i) = 0,
// <e_i, f_j> = delta_ij and <e_i, e_j> = <f_i, f_j> = 0, entries reduced
// (to [0, N) over Z, below deg N over F_p[t]).
template <class Elem>
struct HyperbolicBasis {
  std::vector<std::vector<Elem>> e;
  std::vector<std::vector<Elem>> f;
};

HyperbolicBasis<Integer> hyperbolic_basis_mod(const IntForm& f, const Integer& prime, unsigned exponent);
HyperbolicBasis<FpPoly> hyperbolic_basis_mod(const PolyForm& f, const FpPoly& prime, unsigned exponent);

// Lambda_d: f vanishes mod d on it and R^n / Lambda_d = (R/d)^(n/2).
// Throws PreconditionError when (H) fails.
IntLattice hyperbolic_lattice_mod(const IntForm& f, const Integer& d);
PolyLattice hyperbolic_lattice_mod(const PolyForm& f, const FpPoly& d);

template <class Elem>
struct MultipleCertificate {
  std::vector<Elem> v;
  Elem k;
  Elem d;
  bool bound_ok = false;
  // |k| < bound over Z (bound = |f|); deg k <= bound over F_p[t] (bound =
  // deg f, the additive terms cancel for c = n - 1 and m = 1).
  Integer bound;
  HypothesisReport<Elem> hypothesis;
};

// f(v) = k d with 0 < |k| < |f|. f must be anisotropic; isotropy is settled
// by is_definite or decide_isotropy (whose ceiling applies).
MultipleCertificate<Integer> small_multiple_int(const IntForm& f, const Integer& d, const IsotropyOptions& opts = {});
// d must be a nonunit; deg k <= deg f.
MultipleCertificate<FpPoly> small_multiple_poly(const PolyForm& f, const FpPoly& d,
                                                const IsotropyOptions& opts = {});

// a^2 + b^2 + c^2 + d^2 = n, nonnegative, sorted descending. n >= 1.
std::array<Integer, 4> four_square(const Integer& n);

// Euler's identity: |euler_product(a, b)|^2 = |a|^2 |b|^2.
std::array<Integer, 4> euler_product(const std::array<Integer, 4>& a, const std::array<Integer, 4>& b);

}  // namespace gon
