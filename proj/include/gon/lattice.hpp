#pragma once

#include <optional>
#include <vector>

#include "gon/degree.hpp"
#include "gon/matrix.hpp"
#include "gon/ring.hpp"

namespace gon {

// Full-rank lattice in R^n: the column span of a canonical upper triangular
// HNF basis. Two lattices are equal iff their HNF bases agree.
template <class Ring>
class BasicLattice {
 public:
  using Elem = typename Ring::Elem;
  using Vec = std::vector<Elem>;

  // Generators as the columns of an n x m matrix of rank n.
  BasicLattice(const Ring& ring, const Matrix<Elem>& generators);
  static BasicLattice standard(const Ring& ring, std::size_t n);

  const Ring& ring() const { return ring_; }
  DomainDescriptor domain() const { return ring_.descriptor(); }
  std::size_t dim() const { return h_.rows(); }
  const Matrix<Elem>& basis() const { return h_; }

  // Product of the HNF diagonal: the normalized generator of chi(Lambda).
  Elem det() const;
  // |det| over Z, q^deg det over F_p[t].
  Integer covolume() const;
  // deg det; only meaningful over F_p[t].
  long long deg_covolume() const;

  bool contains(const Vec& x) const;
  // z with basis * z = x, when x lies in the lattice.
  std::optional<Vec> coordinates(const Vec& x) const;
  // Canonical representative of x + Lambda.
  Vec reduce(const Vec& x) const;

  std::vector<Elem> quotient_invariants() const;
  BasicLattice intersect(const BasicLattice& other) const;

  friend bool operator==(const BasicLattice& a, const BasicLattice& b) { return a.h_ == b.h_; }

 private:
  BasicLattice(const Ring& ring, Matrix<Elem> h, int) : ring_(ring), h_(std::move(h)) {}

  Ring ring_;
  Matrix<Elem> h_;
};

using IntLattice = BasicLattice<IntegerRing>;
using PolyLattice = BasicLattice<PolyRing>;

// Canonical lattice of an n x n nonsingular basis; throws on det = 0.
template <class Ring>
BasicLattice<Ring> hnf(const Ring& ring, const Matrix<typename Ring::Elem>& basis);

// { x in R^n : sum_j a_ij x_j = 0 (mod d_i) for every row i }.
template <class Ring>
BasicLattice<Ring> congruence_lattice(const Ring& ring, const Matrix<typename Ring::Elem>& a,
                                      const std::vector<typename Ring::Elem>& moduli);

struct PointCount {
  Integer count;
  Rational ratio;  // count / r^n
};

// #(r * prod[-w_i, w_i] intersected with Lambda) by recursive bounding over
// the HNF coordinates.
PointCount lattice_point_ratio(const std::vector<Rational>& halfwidths, const IntLattice& lattice, const Integer& r);

}  // namespace gon
