#include "gon/linear_forms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "gon/errors.hpp"
#include "gon/normal_form.hpp"

namespace gon {

namespace mp = boost::multiprecision;

Integer Bound::limit() const {
  if (value <= 0) throw InvalidArgument("box bounds must be positive");
  if (root == 0) throw InvalidArgument("bound root must be positive");
  Integer top = strict ? Integer(ceil(value) - 1) : floor(value);
  if (top < 0) return -1;  // nothing admitted, not even 0
  return iroot(top, root);
}

bool Bound::admits(const Integer& x) const {
  Rational lhs(ipow(abs(x), root));
  return strict ? lhs < value : lhs <= value;
}

IntBox IntBox::from_epsilon(const std::vector<Rational>& eps, std::optional<std::size_t> distinguished) {
  if (eps.empty()) throw InvalidArgument("empty box");
  const std::size_t k = distinguished.value_or(eps.size() - 1);
  if (k >= eps.size()) throw InvalidArgument("distinguished index out of range");
  IntBox box;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] <= 0) throw InvalidArgument("box bounds must be positive");
    box.bounds.push_back(Bound{eps[i], 1, i != k});
  }
  return box;
}

bool IntBox::admits(const std::vector<Integer>& x) const {
  if (x.size() != bounds.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!bounds[i].admits(x[i])) return false;
  return true;
}

bool box_guarantee_holds(const IntLattice& lattice, const IntBox& box) {
  if (box.dim() != lattice.dim()) throw InvalidArgument("box dimension does not match the lattice");
  bool any_closed = false;
  unsigned long long l = 1;
  for (const auto& b : box.bounds) {
    any_closed = any_closed || !b.strict;
    l = std::lcm(l, static_cast<unsigned long long>(b.root));
  }
  if (!any_closed) return false;
  // covol^L <= prod value_i^(L / root_i)
  Rational rhs = 1;
  for (const auto& b : box.bounds) rhs *= rational_pow(b.value, l / b.root);
  return Rational(ipow(lattice.covolume(), l)) <= rhs;
}

namespace {

template <class Int>
Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

template <class Int>
struct BoxSearch {
  std::size_t n;
  std::vector<Int> h;  // row-major HNF
  std::vector<Int> lim;
  std::vector<Int> x, z;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;

  bool level(std::size_t i, bool nonzero_above) {
    Int c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += h[i * n + j] * z[j];
    const Int& hi = h[i * n + i];
    const Int c0 = floor_mod(c, hi);
    Int pos = c0, neg = c0 - hi;
    for (;;) {
      const bool pos_ok = pos <= lim[i];
      const bool neg_ok = -neg <= lim[i];
      if (!pos_ok && !neg_ok) return false;
      Int v;
      if (pos_ok && (!neg_ok || pos <= -neg)) {
        v = pos;
        pos += hi;
      } else {
        v = neg;
        neg -= hi;
      }
      if (++nodes > max_nodes) throw SearchLimitExceeded("box enumeration exceeded the node ceiling");
      x[i] = v;
      z[i] = (v - c) / hi;
      const bool nz = nonzero_above || v != 0;
      if (i == 0) {
        if (nz) return true;
      } else if (level(i - 1, nz)) {
        return true;
      }
    }
  }
};

template <class Int>
std::optional<std::vector<Integer>> run_search(const IntLattice& lattice, const std::vector<Integer>& lim,
                                               const SearchOptions& opts) {
  const std::size_t n = lattice.dim();
  BoxSearch<Int> s{n, {}, {}, std::vector<Int>(n, 0), std::vector<Int>(n, 0), 0, opts.max_nodes};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.h.push_back(static_cast<Int>(lattice.basis()(i, j)));
  for (const auto& l : lim) s.lim.push_back(static_cast<Int>(l));
  if (!s.level(n - 1, false)) return std::nullopt;
  std::vector<Integer> out;
  for (const auto& v : s.x) out.emplace_back(v);
  return out;
}

// True when every intermediate of the search provably fits in int64.
bool fits_fast_path(const IntLattice& lattice, const std::vector<Integer>& lim) {
  const std::size_t n = lattice.dim();
  const auto& h = lattice.basis();
  const Integer cap = Integer(1) << 61;
  std::vector<Integer> zb(n);
  for (std::size_t i = n; i-- > 0;) {
    Integer c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c += abs(h(i, j)) * zb[j];
    if (c > cap || lim[i] + h(i, i) > cap || c + lim[i] + h(i, i) > cap) return false;
    zb[i] = (lim[i] + c) / h(i, i) + 1;
  }
  return true;
}

std::optional<std::vector<Integer>> solve_box_impl(const IntLattice& lattice, const IntBox& box,
                                                   const SearchOptions& opts, bool allow_fast) {
  if (box.dim() != lattice.dim()) throw InvalidArgument("box dimension does not match the lattice");
  std::vector<Integer> lim;
  for (const auto& b : box.bounds) {
    lim.push_back(b.limit());
    if (lim.back() < 0) return std::nullopt;
  }
  if (allow_fast && fits_fast_path(lattice, lim)) return run_search<std::int64_t>(lattice, lim, opts);
  return run_search<Integer>(lattice, lim, opts);
}

// Order of the fixed enumeration: compare from the last coordinate down,
// each by (|v|, negative after positive).
bool precedes(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    const Integer ia = abs(a[i]), ib = abs(b[i]);
    if (ia != ib) return ia < ib;
    if (a[i] != b[i]) return a[i] > 0;
  }
  return false;
}

using Real = long double;

// Every nonzero lattice point of the box, enumerated inside the ball of
// radius sqrt(n) around the box scaled to [-1, 1]^n, in an LLL-reduced basis.
// Floating point only steers the enumeration; candidates are tested exactly.
// Gives up quietly when the node budget runs out.
void reduced_box_points(const IntLattice& lattice, const IntBox& box, std::uint64_t max_nodes,
                        std::optional<std::vector<Integer>>& best) {
  const std::size_t n = lattice.dim();
  std::vector<Real> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& b = box.bounds[i];
    w[i] = std::pow(b.value.convert_to<Real>(), Real(1) / Real(b.root));
    if (!(w[i] > 0) || !std::isfinite(w[i])) return;
  }
  std::vector<std::vector<Integer>> basis(n, std::vector<Integer>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis[j][i] = lattice.basis()(i, j);
  std::vector<std::vector<Real>> z(n, std::vector<Real>(n)), gs(n, std::vector<Real>(n)), mu(n, std::vector<Real>(n));
  std::vector<Real> norm2(n);
  auto refresh = [&](std::size_t j) {
    for (std::size_t i = 0; i < n; ++i) z[j][i] = basis[j][i].convert_to<Real>() / w[i];
  };
  auto gram_schmidt = [&]() {
    for (std::size_t j = 0; j < n; ++j) {
      gs[j] = z[j];
      for (std::size_t k = 0; k < j; ++k) {
        Real dot = 0;
        for (std::size_t i = 0; i < n; ++i) dot += z[j][i] * gs[k][i];
        mu[j][k] = dot / norm2[k];
        for (std::size_t i = 0; i < n; ++i) gs[j][i] -= mu[j][k] * gs[k][i];
      }
      norm2[j] = 0;
      for (std::size_t i = 0; i < n; ++i) norm2[j] += gs[j][i] * gs[j][i];
      if (!(norm2[j] > 0)) throw InternalError("degenerate basis in reduced box search");
    }
  };
  for (std::size_t j = 0; j < n; ++j) refresh(j);
  gram_schmidt();
  // LLL with delta = 0.99.
  for (std::size_t k = 1, swaps = 0; k < n;) {
    for (std::size_t j = k; j-- > 0;) {
      const Real r = std::round(mu[k][j]);
      if (r == 0) continue;
      const Integer ri(static_cast<long long>(r));
      for (std::size_t i = 0; i < n; ++i) basis[k][i] -= ri * basis[j][i];
      refresh(k);
      gram_schmidt();
    }
    if (norm2[k] >= (Real(0.99) - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      std::swap(z[k], z[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
      if (++swaps > 100000) return;
    }
  }
  // Fincke-Pohst over |sum c_j z_j|^2 <= n (with slack).
  const Real radius2 = Real(n) * (1 + Real(1e-9)) + Real(1e-9);
  std::vector<long long> c(n, 0);
  std::uint64_t nodes = 0;
  bool complete = true;
  std::function<void(std::size_t, Real)> descend = [&](std::size_t level, Real used) {
    if (!complete) return;
    Real center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center -= mu[j][level] * static_cast<Real>(c[j]);
    const Real room = radius2 - used;
    if (room < 0) return;
    const Real half = std::sqrt(room / norm2[level]) + Real(1e-9);
    const auto lo = static_cast<long long>(std::ceil(center - half));
    const auto hi = static_cast<long long>(std::floor(center + half));
    for (long long v = lo; v <= hi; ++v) {
      if (++nodes > max_nodes) {
        complete = false;
        return;
      }
      c[level] = v;
      const Real d = static_cast<Real>(v) - center;
      const Real next = used + d * d * norm2[level];
      if (level > 0) {
        descend(level - 1, next);
        continue;
      }
      std::vector<Integer> y(n, Integer(0));
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (c[j] == 0) continue;
        const Integer cj(c[j]);
        for (std::size_t i = 0; i < n; ++i) y[i] += cj * basis[j][i];
      }
      for (const auto& yi : y) nonzero = nonzero || yi != 0;
      if (nonzero && box.admits(y) && (!best || precedes(y, *best))) best = std::move(y);
    }
    c[level] = 0;
  };
  descend(n - 1, 0);
}

}  // namespace

std::optional<std::vector<Integer>> solve_box_int_reduced(const IntLattice& lattice, const IntBox& box,
                                                          const SearchOptions& opts) {
  if (box.dim() != lattice.dim()) throw InvalidArgument("box dimension does not match the lattice");
  for (const auto& b : box.bounds)
    if (b.limit() < 0) return std::nullopt;
  std::optional<std::vector<Integer>> best;
  reduced_box_points(lattice, box, 1'000'000, best);
  if (best) return best;
  return solve_box_int(lattice, box, opts);
}

std::optional<std::vector<Integer>> solve_box_int(const IntLattice& lattice, const IntBox& box,
                                                  const SearchOptions& opts) {
  return solve_box_impl(lattice, box, opts, true);
}

std::optional<std::vector<Integer>> solve_box_int_reference(const IntLattice& lattice, const IntBox& box,
                                                            const SearchOptions& opts) {
  return solve_box_impl(lattice, box, opts, false);
}

namespace {

// Gaussian elimination over F_p; returns a nonzero kernel vector of the
// rows x cols matrix with the first free column set to 1.
std::optional<std::vector<std::uint64_t>> fp_kernel_vector(std::vector<std::vector<std::uint64_t>> a,
                                                           std::size_t cols, std::uint64_t p) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    const std::uint64_t inv = fp_inverse(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = (a[i][k] + (p - f) * a[r][k]) % p;
    }
    pivot_col.push_back(c);
    is_pivot[c] = true;
    ++r;
  }
  std::size_t free = 0;
  while (free < cols && is_pivot[free]) ++free;
  if (free == cols) return std::nullopt;
  std::vector<std::uint64_t> v(cols, 0);
  v[free] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (p - a[i][free]) % p;
  return v;
}

// Nonzero y in the column span of H with deg y_i <= e_i, if any.
std::optional<std::vector<FpPoly>> small_vector_poly(const PolyRing& ring, const Matrix<FpPoly>& h,
                                                     const std::vector<long long>& e) {
  const std::size_t n = h.rows();
  const std::uint64_t p = ring.p;
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(h(i, i).deg());
  const std::size_t qdim = offset[n];
  // Basis of B: t^k e_i, coordinates in order, degrees descending.
  std::vector<std::pair<std::size_t, long long>> mono;
  for (std::size_t i = 0; i < n; ++i)
    for (long long k = e[i]; k >= 0; --k) mono.emplace_back(i, k);
  if (mono.empty()) return std::nullopt;
  std::vector<std::vector<std::uint64_t>> a(qdim, std::vector<std::uint64_t>(mono.size(), 0));
  for (std::size_t c = 0; c < mono.size(); ++c) {
    std::vector<FpPoly> v(n, ring.zero());
    v[mono[c].first] = FpPoly::monomial(p, 1, static_cast<std::size_t>(mono[c].second));
    auto res = reduce_mod_hnf(ring, h, v);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < res[i].coeffs().size(); ++k) a[offset[i] + k][c] = res[i].coeffs()[k];
  }
  auto ker = fp_kernel_vector(std::move(a), mono.size(), p);
  if (!ker) return std::nullopt;
  std::vector<FpPoly> y(n, ring.zero());
  for (std::size_t c = 0; c < mono.size(); ++c)
    if ((*ker)[c] != 0) y[mono[c].first] += FpPoly::monomial(p, (*ker)[c], static_cast<std::size_t>(mono[c].second));
  return y;
}

}  // namespace

std::optional<std::vector<FpPoly>> solve_box_poly(const PolyLattice& lattice, const std::vector<long long>& e) {
  if (e.size() != lattice.dim()) throw InvalidArgument("degree bounds do not match the lattice dimension");
  for (auto v : e)
    if (v < 0) throw InvalidArgument("degree bounds must be non-negative");
  return small_vector_poly(lattice.ring(), lattice.basis(), e);
}

std::vector<FpPoly> solve_tornheim(std::uint64_t p, const Matrix<RatFunc>& c, const std::vector<long long>& e) {
  const std::size_t n = c.rows();
  if (n == 0 || c.cols() != n) throw InvalidArgument("Tornheim needs a square matrix");
  if (e.size() != n) throw InvalidArgument("degree bounds do not match the matrix size");
  const PolyRing ring(p);
  // Clear denominators with f = monic lcm of all entry denominators.
  FpPoly f = ring.one();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (c(i, j).den.modulus() != p && !c(i, j).is_zero()) throw InvalidArgument("matrix entry over the wrong field");
      if (!c(i, j).is_zero()) f = lcm(f, c(i, j).den);
    }
  Matrix<FpPoly> cp(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!c(i, j).is_zero()) cp(i, j) = c(i, j).num * (f / c(i, j).den);
  HnfResult<PolyRing> res;
  try {
    res = column_hnf(ring, cp);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("Tornheim matrix is singular");
  }
  long long deg_det = -static_cast<long long>(n) * f.deg();
  for (std::size_t i = 0; i < n; ++i) deg_det += res.h(i, i).deg();
  long long budget = static_cast<long long>(n) - 1;
  for (auto v : e) budget += v;
  if (deg_det > budget) {
    throw PreconditionError("Tornheim hypothesis fails: deg det C = " + std::to_string(deg_det) +
                            " > n - 1 + sum e = " + std::to_string(budget));
  }
  std::vector<long long> ep(e);
  for (auto& v : ep) v += f.deg();
  auto y = small_vector_poly(ring, res.h, ep);
  if (!y) throw InternalError("Tornheim search found no vector although the hypothesis holds");
  std::vector<FpPoly> z;
  auto rest = reduce_mod_hnf(ring, res.h, *y, &z);
  for (const auto& r : rest)
    if (!r.is_zero()) throw InternalError("Tornheim kernel vector is not in the lattice");
  return mat_vec(res.u, z, ring.zero());
}

std::optional<std::vector<Integer>> solve_congruence_box(const Matrix<Integer>& a, const std::vector<Integer>& moduli,
                                                         const IntBox& box) {
  return solve_box_int(congruence_lattice(IntegerRing{}, a, moduli), box);
}

std::vector<Integer> dioph_approx_int(const std::vector<Rational>& theta, const Rational& m) {
  if (m <= 1) throw PreconditionError("Diophantine approximation needs M > 1");
  const std::size_t n = theta.size();
  if (n == 0) throw InvalidArgument("theta must be nonempty");
  Integer d = 1;
  for (const auto& t : theta) d = lcm(d, mp::denominator(t));
  // y_i = d (theta_i x_{n+1} - x_i), y_{n+1} = x_{n+1}
  Matrix<Integer> b(n + 1, n + 1, Integer(0));
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = -d;
    b(i, n) = mp::numerator(theta[i]) * (d / mp::denominator(theta[i]));
  }
  b(n, n) = 1;
  IntBox box;
  const Rational small = Rational(ipow(d, n)) / m;
  for (std::size_t i = 0; i < n; ++i) box.bounds.push_back(Bound{small, static_cast<unsigned>(n), false});
  box.bounds.push_back(Bound{m, 1, true});
  IntLattice lat(IntegerRing{}, b);
  auto y = solve_box_int_reduced(lat, box);
  if (!y) throw InternalError("approximation lattice has no point in a box of full volume");
  std::vector<Integer> x(n + 1);
  x[n] = (*y)[n];
  for (std::size_t i = 0; i < n; ++i) {
    Integer num = mp::numerator(theta[i]) * (d / mp::denominator(theta[i])) * x[n] - (*y)[i];
    x[i] = num / d;
  }
  // Exact re-check: |x_{n+1} theta_i - x_i|^n * M <= 1 and 0 < |x_{n+1}| < M.
  if (x[n] == 0 || Rational(abs(x[n])) >= m) throw InternalError("approximation denominator out of range");
  for (std::size_t i = 0; i < n; ++i) {
    Rational err = abs(Rational(x[n]) * theta[i] - Rational(x[i]));
    if (rational_pow(err, n) * m > 1) throw InternalError("approximation error exceeds M^(-1/n)");
  }
  return x;
}

std::vector<FpPoly> dioph_approx_poly(std::uint64_t p, const std::vector<RatFunc>& theta, long long deg_m) {
  if (deg_m < 1) throw PreconditionError("function-field approximation needs deg M >= 1");
  const std::size_t n = theta.size();
  if (n == 0) throw InvalidArgument("theta must be nonempty");
  const PolyRing ring(p);
  const RatFunc zero(ring.zero()), one(ring.one()), minus_one(-ring.one());
  Matrix<RatFunc> c(n + 1, n + 1, zero);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = minus_one;
    c(i, n) = theta[i];
  }
  c(n, n) = one;
  const long long ln = static_cast<long long>(n);
  // ceil((1 - n - deg M) / n)
  const long long num = 1 - ln - deg_m;
  const long long ei = num >= 0 ? (num + ln - 1) / ln : -((-num) / ln);
  std::vector<long long> e(n + 1, ei);
  e[n] = deg_m - 1;
  auto x = solve_tornheim(p, c, e);
  if (x[n].is_zero() || x[n].deg() > deg_m - 1) throw InternalError("approximation denominator out of range");
  for (std::size_t i = 0; i < n; ++i) {
    RatFunc diff(x[n] * theta[i].num - x[i] * theta[i].den, theta[i].den);
    Degree dg = diff.degree();
    if (!dg.is_neg_infinity() && ln * dg.value() > -deg_m) {
      throw InternalError("approximation error exceeds the degree bound");
    }
  }
  return x;
}

std::vector<std::vector<Integer>> pigeonhole_collisions(const std::vector<Integer>& group,
                                                        const std::vector<std::vector<Integer>>& gens,
                                                        const std::vector<std::vector<Integer>>& s,
                                                        std::size_t kappa) {
  const std::size_t k = group.size();
  if (k == 0) throw InvalidArgument("group needs at least one cyclic factor");
  for (const auto& g : group)
    if (g < 1) throw InvalidArgument("cyclic factor orders must be positive");
  if (kappa == 0) throw InvalidArgument("kappa must be positive");
  auto reduce_g = [&](const std::vector<Integer>& v) {
    if (v.size() != k) throw InvalidArgument("group element has the wrong length");
    std::vector<Integer> r(k);
    for (std::size_t i = 0; i < k; ++i) r[i] = mod_floor(v[i], group[i]);
    return r;
  };
  // Lift Lambda to Z^k: gens plus the relations g_i e_i.
  Matrix<Integer> lift(k, gens.size() + k, Integer(0));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto g = reduce_g(gens[j]);
    for (std::size_t i = 0; i < k; ++i) lift(i, j) = g[i];
  }
  for (std::size_t i = 0; i < k; ++i) lift(i, gens.size() + i) = group[i];
  IntLattice lambda(IntegerRing{}, lift);
  const Integer index = lambda.covolume();

  std::vector<std::vector<Integer>> elems;
  for (const auto& v : s) elems.push_back(reduce_g(v));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (Integer(elems.size()) <= Integer(kappa) * index) {
    throw PreconditionError("pigeonhole hypothesis fails: #S = " + std::to_string(elems.size()) +
                            " <= kappa * index = " + to_string(Integer(kappa) * index));
  }
  std::map<std::vector<Integer>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < elems.size(); ++i) buckets[lambda.reduce(elems[i])].push_back(i);
  for (const auto& [rep, members] : buckets) {
    if (members.size() <= kappa) continue;
    std::vector<std::vector<Integer>> out;
    const auto& s0 = elems[members[0]];
    for (std::size_t m = 1; m < members.size(); ++m) {
      std::vector<Integer> diff(k);
      for (std::size_t i = 0; i < k; ++i) diff[i] = mod_floor(elems[members[m]][i] - s0[i], group[i]);
      out.push_back(std::move(diff));
    }
    return out;
  }
  throw InternalError("no coset holds more than kappa elements");
}

}  // namespace gon
