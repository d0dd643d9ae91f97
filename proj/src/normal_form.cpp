#include "gon/normal_form.hpp"

#include <optional>

namespace gon {

template <class Ring>
HnfResult<Ring> column_hnf(const Ring& ring, const Matrix<typename Ring::Elem>& a) {
  using Elem = typename Ring::Elem;
  const std::size_t n = a.rows(), m = a.cols();
  if (m < n || n == 0) throw InvalidArgument("generator matrix has fewer columns than rows");
  Matrix<Elem> w = a;
  Matrix<Elem> u = Matrix<Elem>::identity(m, ring.zero(), ring.one());

  // Active columns for row i: 0..i plus the surplus columns n..m-1.
  std::vector<std::size_t> active;
  for (std::size_t ii = n; ii-- > 0;) {
    active.clear();
    for (std::size_t j = 0; j <= ii; ++j) active.push_back(j);
    for (std::size_t j = n; j < m; ++j) active.push_back(j);
    for (;;) {
      std::optional<std::size_t> piv;
      std::size_t nonzero = 0;
      for (auto j : active) {
        if (ring.is_zero(w(ii, j))) continue;
        ++nonzero;
        if (!piv || ring.smaller(w(ii, j), w(ii, *piv))) piv = j;
      }
      if (!piv) throw InvalidArgument("generator matrix is rank deficient");
      if (nonzero == 1) {
        w.swap_columns(*piv, ii);
        u.swap_columns(*piv, ii);
        break;
      }
      Elem q, r;
      for (auto j : active) {
        if (j == *piv || ring.is_zero(w(ii, j))) continue;
        ring.divmod(w(ii, j), w(ii, *piv), q, r);
        w.sub_column(j, *piv, q);
        u.sub_column(j, *piv, q);
      }
    }
    const Elem unit = ring.normalizer(w(ii, ii));
    w.scale_column(ii, unit);
    u.scale_column(ii, unit);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Elem q, r;
    for (std::size_t j = ii + 1; j < n; ++j) {
      ring.divmod(w(ii, j), w(ii, ii), q, r);
      if (ring.is_zero(q)) continue;
      w.sub_column(j, ii, q);
      u.sub_column(j, ii, q);
    }
  }
  HnfResult<Ring> out{Matrix<Elem>(n, n, ring.zero()), std::move(u)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.h(i, j) = w(i, j);
  return out;
}

template <class Ring>
std::vector<std::vector<typename Ring::Elem>> kernel_basis(const Ring& ring, const Matrix<typename Ring::Elem>& a) {
  auto res = column_hnf(ring, a);
  std::vector<std::vector<typename Ring::Elem>> out;
  for (std::size_t j = a.rows(); j < a.cols(); ++j) out.push_back(res.u.column(j));
  return out;
}

template <class Ring>
std::vector<typename Ring::Elem> smith_invariants(const Ring& ring, Matrix<typename Ring::Elem> a) {
  using Elem = typename Ring::Elem;
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InvalidArgument("smith_invariants needs a square matrix");
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Pivot: least size in the trailing block, ties by row then column.
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (ring.is_zero(a(i, j))) continue;
          if (!piv || ring.smaller(a(i, j), a(piv->first, piv->second))) piv = {i, j};
        }
      if (!piv) throw InvalidArgument("matrix is singular");
      a.swap_rows(t, piv->first);
      a.swap_columns(t, piv->second);
      bool clean = true;
      Elem q, r;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (ring.is_zero(a(i, t))) continue;
        ring.divmod(a(i, t), a(t, t), q, r);
        a.sub_row(i, t, q);
        if (!ring.is_zero(a(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (ring.is_zero(a(t, j))) continue;
        ring.divmod(a(t, j), a(t, t), q, r);
        a.sub_column(j, t, q);
        if (!ring.is_zero(a(t, j))) clean = false;
      }
      if (clean) break;
    }
  }
  std::vector<Elem> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(ring.normalize(a(i, i)));
  // Diagonal to divisibility chain: (a, b) -> (gcd, lcm).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Elem g = ring.gcd(d[i], d[j]);
      Elem q, r;
      ring.divmod(d[i], g, q, r);
      d[j] = ring.normalize(q * d[j]);
      d[i] = ring.normalize(g);
    }
  std::vector<Elem> out;
  for (auto& x : d)
    if (!ring.is_unit(x)) out.push_back(x);
  return out;
}

template <class Ring>
std::vector<typename Ring::Elem> reduce_mod_hnf(const Ring& ring, const Matrix<typename Ring::Elem>& h,
                                                std::vector<typename Ring::Elem> x,
                                                std::vector<typename Ring::Elem>* z) {
  using Elem = typename Ring::Elem;
  const std::size_t n = h.rows();
  if (x.size() != n) throw InvalidArgument("vector dimension mismatch");
  if (z) z->assign(n, ring.zero());
  Elem q, r;
  for (std::size_t i = n; i-- > 0;) {
    ring.divmod(x[i], h(i, i), q, r);
    if (ring.is_zero(q)) continue;
    for (std::size_t k = 0; k <= i; ++k) x[k] -= q * h(k, i);
    if (z) (*z)[i] = q;
  }
  return x;
}

#define GON_INSTANTIATE(R)                                                                                 \
  template HnfResult<R> column_hnf<R>(const R&, const Matrix<R::Elem>&);                                  \
  template std::vector<std::vector<R::Elem>> kernel_basis<R>(const R&, const Matrix<R::Elem>&);           \
  template std::vector<R::Elem> smith_invariants<R>(const R&, Matrix<R::Elem>);                           \
  template std::vector<R::Elem> reduce_mod_hnf<R>(const R&, const Matrix<R::Elem>&, std::vector<R::Elem>, \
                                                  std::vector<R::Elem>*);
GON_INSTANTIATE(IntegerRing)
GON_INSTANTIATE(PolyRing)
#undef GON_INSTANTIATE

}  // namespace gon
