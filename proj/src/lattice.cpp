#include "gon/lattice.hpp"

#include <functional>

#include "gon/normal_form.hpp"

namespace gon {

template <class Ring>
BasicLattice<Ring>::BasicLattice(const Ring& ring, const Matrix<Elem>& generators)
    : ring_(ring), h_(column_hnf(ring, generators).h) {}

template <class Ring>
BasicLattice<Ring> BasicLattice<Ring>::standard(const Ring& ring, std::size_t n) {
  return BasicLattice(ring, Matrix<Elem>::identity(n, ring.zero(), ring.one()), 0);
}

template <class Ring>
typename Ring::Elem BasicLattice<Ring>::det() const {
  Elem d = ring_.one();
  for (std::size_t i = 0; i < dim(); ++i) d = d * h_(i, i);
  return d;
}

template <class Ring>
Integer BasicLattice<Ring>::covolume() const {
  Integer c = 1;
  for (std::size_t i = 0; i < dim(); ++i) c *= ring_.norm(h_(i, i));
  return c;
}

template <class Ring>
long long BasicLattice<Ring>::deg_covolume() const {
  if constexpr (std::is_same_v<Ring, PolyRing>) {
    long long d = 0;
    for (std::size_t i = 0; i < dim(); ++i) d += h_(i, i).deg();
    return d;
  } else {
    throw InvalidArgument("degree covolume is defined over F_p[t] only");
  }
}

template <class Ring>
std::optional<typename BasicLattice<Ring>::Vec> BasicLattice<Ring>::coordinates(const Vec& x) const {
  Vec z;
  Vec rest = reduce_mod_hnf(ring_, h_, x, &z);
  for (const auto& v : rest)
    if (!ring_.is_zero(v)) return std::nullopt;
  return z;
}

template <class Ring>
bool BasicLattice<Ring>::contains(const Vec& x) const {
  return coordinates(x).has_value();
}

template <class Ring>
typename BasicLattice<Ring>::Vec BasicLattice<Ring>::reduce(const Vec& x) const {
  return reduce_mod_hnf(ring_, h_, x);
}

template <class Ring>
std::vector<typename Ring::Elem> BasicLattice<Ring>::quotient_invariants() const {
  return smith_invariants(ring_, h_);
}

template <class Ring>
BasicLattice<Ring> BasicLattice<Ring>::intersect(const BasicLattice& other) const {
  const std::size_t n = dim();
  if (other.dim() != n) throw InvalidArgument("lattice dimension mismatch");
  // Kernel of [B1 | B2]: B1 a = -B2 b, and B1 a spans the intersection.
  Matrix<Elem> m(n, 2 * n, ring_.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = h_(i, j);
      m(i, n + j) = other.h_(i, j);
    }
  auto ker = kernel_basis(ring_, m);
  Matrix<Elem> gens(n, ker.size(), ring_.zero());
  for (std::size_t k = 0; k < ker.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gens(i, k) += h_(i, j) * ker[k][j];
  return BasicLattice(ring_, gens);
}

template <class Ring>
BasicLattice<Ring> hnf(const Ring& ring, const Matrix<typename Ring::Elem>& basis) {
  if (basis.rows() != basis.cols()) throw InvalidArgument("lattice basis must be square");
  try {
    return BasicLattice<Ring>(ring, basis);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("lattice basis is singular");
  }
}

template <class Ring>
BasicLattice<Ring> congruence_lattice(const Ring& ring, const Matrix<typename Ring::Elem>& a,
                                      const std::vector<typename Ring::Elem>& moduli) {
  using Elem = typename Ring::Elem;
  const std::size_t m = a.rows(), n = a.cols();
  if (moduli.size() != m) throw InvalidArgument("one modulus per congruence row required");
  for (const auto& d : moduli)
    if (ring.is_zero(d)) throw InvalidArgument("congruence modulus must be nonzero");
  if (m == 0) return BasicLattice<Ring>::standard(ring, n);
  // Kernel of [A | diag(d)] projected to the x-part.
  Matrix<Elem> big(m, n + m, ring.zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) big(i, j) = a(i, j);
    big(i, n + i) = moduli[i];
  }
  auto ker = kernel_basis(ring, big);
  Matrix<Elem> gens(n, ker.size(), ring.zero());
  for (std::size_t k = 0; k < ker.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) gens(j, k) = ker[k][j];
  return BasicLattice<Ring>(ring, gens);
}

template class BasicLattice<IntegerRing>;
template class BasicLattice<PolyRing>;
template IntLattice hnf<IntegerRing>(const IntegerRing&, const Matrix<Integer>&);
template PolyLattice hnf<PolyRing>(const PolyRing&, const Matrix<FpPoly>&);
template IntLattice congruence_lattice<IntegerRing>(const IntegerRing&, const Matrix<Integer>&,
                                                    const std::vector<Integer>&);
template PolyLattice congruence_lattice<PolyRing>(const PolyRing&, const Matrix<FpPoly>&, const std::vector<FpPoly>&);

namespace {

// Number of x = c (mod h) with |x| <= lim.
Integer count_residue(const Integer& c, const Integer& h, const Integer& lim) {
  // floor((lim - c) / h) - ceil((-lim - c) / h) + 1
  Integer hi = floor_div(lim - c, h);
  Integer lo = -floor_div(lim + c, h);
  return hi < lo ? Integer(0) : Integer(hi - lo + 1);
}

}  // namespace

PointCount lattice_point_ratio(const std::vector<Rational>& halfwidths, const IntLattice& lattice, const Integer& r) {
  const std::size_t n = lattice.dim();
  if (halfwidths.size() != n) throw InvalidArgument("box dimension does not match the lattice");
  if (r <= 0) throw InvalidArgument("scale r must be positive");
  std::vector<Integer> lim(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (halfwidths[i] <= 0) throw InvalidArgument("box half-widths must be positive");
    lim[i] = floor(halfwidths[i] * Rational(r));
  }
  const auto& h = lattice.basis();
  std::vector<Integer> z(n);
  // Residue target for row i is sum_{j>i} h_ij z_j.
  std::function<Integer(std::size_t)> rec = [&](std::size_t i) -> Integer {
    Integer c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += h(i, j) * z[j];
    if (i == 0) return count_residue(c, h(0, 0), lim[0]);
    Integer total = 0;
    // x_i = h_ii z_i + c within [-lim, lim]
    Integer zlo = -floor_div(lim[i] + c, h(i, i));
    Integer zhi = floor_div(lim[i] - c, h(i, i));
    for (Integer zi = zlo; zi <= zhi; ++zi) {
      z[i] = zi;
      total += rec(i - 1);
    }
    return total;
  };
  PointCount out;
  out.count = rec(n - 1);
  out.ratio = Rational(out.count, ipow(r, n));
  return out;
}

}  // namespace gon
