#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "gon/matrix.hpp"
#include "gon/ring.hpp"

namespace gon {

// f = sum_{i <= k} m_ik x_i x_k, stored as an upper triangular matrix.
template <class Ring>
class BasicQuadForm {
 public:
  using Elem = typename Ring::Elem;
  using Vec = std::vector<Elem>;

  BasicQuadForm(const Ring& ring, std::size_t n);
  // Terms (i, k, m_ik) with 0-based i <= k; repeated terms accumulate.
  BasicQuadForm(const Ring& ring, std::size_t n, const std::vector<std::tuple<std::size_t, std::size_t, Elem>>& terms);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return n_; }
  const Elem& coeff(std::size_t i, std::size_t k) const;
  void add_term(std::size_t i, std::size_t k, const Elem& m);
  bool is_zero() const;

  Elem evaluate(const Vec& v) const;
  // <x, y> = f(x + y) - f(x) - f(y)
  Elem bilinear(const Vec& x, const Vec& y) const;
  // det(M + M^T), the Gram matrix of the bilinear form.
  Elem disc() const;
  Matrix<Elem> gram() const;

  friend bool operator==(const BasicQuadForm& a, const BasicQuadForm& b) { return a.m_ == b.m_; }

 private:
  Ring ring_;
  std::size_t n_;
  Matrix<Elem> m_;
};

using IntForm = BasicQuadForm<IntegerRing>;
using PolyForm = BasicQuadForm<PolyRing>;

// a* = f(b) a - <a, b> b. Requires f(a) = 0, a != 0 and f(b) != 0.
template <class Ring>
std::vector<typename Ring::Elem> descent_step(const BasicQuadForm<Ring>& f, const std::vector<typename Ring::Elem>& a,
                                              const std::vector<typename Ring::Elem>& b);

// Divide by the content (positive gcd / monic gcd); zero stays zero.
std::vector<Integer> primitive(const std::vector<Integer>& v);
std::vector<FpPoly> primitive(const std::vector<FpPoly>& v);

// Sum of |m_ik|; rejects the zero form.
Integer form_norm(const IntForm& f);
// Max deg m_ik; rejects the zero form.
long long form_degree(const PolyForm& f);

// ceil((3|f|)^((n-1)/2)), the coordinate bound for a smallest zero.
Integer cassels_bound(const IntForm& f);
// max |v_i| <= (3|f|)^((n-1)/2), decided exactly as max|v|^2 <= (3|f|)^(n-1).
bool within_cassels_bound(const IntForm& f, const std::vector<Integer>& v);
// floor((n-1) deg f / 2): with c(F_p[t], n) = n - 1 the additive term vanishes.
long long prestel_bound(const PolyForm& f);
bool within_prestel_bound(const PolyForm& f, const std::vector<FpPoly>& v);

// Positive or negative definite (Sylvester's criterion on M + M^T); such
// forms are anisotropic.
bool is_definite(const IntForm& f);

template <class Elem>
struct IsotropyCertificate {
  bool isotropic = false;
  std::vector<Elem> witness;  // nonzero with f(witness) = 0 when isotropic
  // Search bound that was exhausted: max |v_i| over Z, max deg v_i over F_p[t].
  Integer bound;
};

struct IsotropyOptions {
  // Candidate vectors examined: (2B + 1)^(n - 1) over Z, p^((d+1)(n-1)) over
  // F_p[t]. Beyond it the search aborts with SearchLimitExceeded.
  Integer max_candidates = 100'000'000;
};

IsotropyCertificate<Integer> decide_isotropy(const IntForm& f, const IsotropyOptions& opts = {});
IsotropyCertificate<FpPoly> decide_isotropy(const PolyForm& f, const IsotropyOptions& opts = {});

// Minimal isotropic vector with coordinates in [-bound, bound]: least
// max |v_i|, ties broken by comparing coordinates from the last one down in
// the order 0 < 1 < -1 < 2 < -2 < ... Full scan; the test oracle.
std::optional<std::vector<Integer>> brute_min_isotropic(const IntForm& f, const Integer& bound);
// Over F_p[t]: least max deg among vectors with deg v_i <= bound, ties
// broken by enumeration order, last nonzero coordinate monic.
std::optional<std::vector<FpPoly>> brute_min_isotropic(const PolyForm& f, long long bound);

template <class Elem>
struct DescentTrace {
  std::vector<Elem> witness;
  // Size of a after each step (max |a_i|, or max deg a_i), starting with the
  // primitive seed.
  std::vector<Integer> sizes;
};

DescentTrace<Integer> minimize_isotropic(const IntForm& f, const std::vector<Integer>& seed);
DescentTrace<FpPoly> minimize_isotropic(const PolyForm& f, const std::vector<FpPoly>& seed);

}  // namespace gon
