#pragma once

#include <vector>

#include "gon/matrix.hpp"
#include "gon/ring.hpp"

namespace gon {

template <class Ring>
struct HnfResult {
  using Elem = typename Ring::Elem;
  Matrix<Elem> h;  // n x n upper triangular, canonical
  Matrix<Elem> u;  // m x m unimodular with A * U = [H | 0]
};

// Column Hermite normal form of an n x m generator matrix of rank n.
// Rows are eliminated bottom-up; the pivot is the entry of least Euclidean
// size with ties going to the lowest column. The diagonal is normalized
// (positive / monic) and entries right of the diagonal are reduced modulo
// the diagonal entry of their row. Throws InvalidArgument on rank deficit.
template <class Ring>
HnfResult<Ring> column_hnf(const Ring& ring, const Matrix<typename Ring::Elem>& a);

// Basis of {x : A x = 0} as the trailing columns of U, for A of full row rank.
template <class Ring>
std::vector<std::vector<typename Ring::Elem>> kernel_basis(const Ring& ring, const Matrix<typename Ring::Elem>& a);

// Elementary divisors d_1 | d_2 | ... of a square nonsingular matrix, units
// omitted, each normalized.
template <class Ring>
std::vector<typename Ring::Elem> smith_invariants(const Ring& ring, Matrix<typename Ring::Elem> a);

// Reduces x modulo the column span of an upper triangular H (canonical
// coset representative) and returns the quotient coordinates in z.
template <class Ring>
std::vector<typename Ring::Elem> reduce_mod_hnf(const Ring& ring, const Matrix<typename Ring::Elem>& h,
                                                std::vector<typename Ring::Elem> x,
                                                std::vector<typename Ring::Elem>* z = nullptr);

}  // namespace gon
