#include "gon/quadform.hpp"

#include <algorithm>

#include "gon/errors.hpp"
#include "gon/kernels/square_scan.hpp"
#include "gon/linear_forms.hpp"
#include "gon/normal_form.hpp"

namespace gon {

template <class Ring>
BasicQuadForm<Ring>::BasicQuadForm(const Ring& ring, std::size_t n) : ring_(ring), n_(n), m_(n, n, ring.zero()) {
  if (n == 0) throw InvalidArgument("quadratic form needs at least one variable");
}

template <class Ring>
BasicQuadForm<Ring>::BasicQuadForm(const Ring& ring, std::size_t n,
                                   const std::vector<std::tuple<std::size_t, std::size_t, Elem>>& terms)
    : BasicQuadForm(ring, n) {
  for (const auto& [i, k, m] : terms) add_term(i, k, m);
}

template <class Ring>
const typename Ring::Elem& BasicQuadForm<Ring>::coeff(std::size_t i, std::size_t k) const {
  if (i > k) std::swap(i, k);
  if (k >= n_) throw InvalidArgument("form index out of range");
  return m_(i, k);
}

template <class Ring>
void BasicQuadForm<Ring>::add_term(std::size_t i, std::size_t k, const Elem& m) {
  if (i > k) std::swap(i, k);
  if (k >= n_) throw InvalidArgument("form index out of range");
  m_(i, k) += m;
}

template <class Ring>
bool BasicQuadForm<Ring>::is_zero() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = i; k < n_; ++k)
      if (!ring_.is_zero(m_(i, k))) return false;
  return true;
}

template <class Ring>
typename Ring::Elem BasicQuadForm<Ring>::evaluate(const Vec& v) const {
  if (v.size() != n_) throw InvalidArgument("vector length does not match the form");
  Elem s = ring_.zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (ring_.is_zero(v[i])) continue;
    Elem row = ring_.zero();
    for (std::size_t k = i; k < n_; ++k) row += m_(i, k) * v[k];
    s += v[i] * row;
  }
  return s;
}

template <class Ring>
typename Ring::Elem BasicQuadForm<Ring>::bilinear(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw InvalidArgument("vector length does not match the form");
  Vec sum(n_, ring_.zero());
  for (std::size_t i = 0; i < n_; ++i) sum[i] = x[i] + y[i];
  return evaluate(sum) - evaluate(x) - evaluate(y);
}

template <class Ring>
Matrix<typename Ring::Elem> BasicQuadForm<Ring>::gram() const {
  Matrix<Elem> g(n_, n_, ring_.zero());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = i; k < n_; ++k) {
      g(i, k) += m_(i, k);
      g(k, i) += m_(i, k);
    }
  return g;
}

template <class Ring>
typename Ring::Elem BasicQuadForm<Ring>::disc() const {
  // Bareiss elimination; every division is exact over both rings.
  Matrix<Elem> g = gram();
  const std::size_t n = n_;
  Elem prev = ring_.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_.is_zero(g(k, k))) {
      std::size_t r = k + 1;
      while (r < n && ring_.is_zero(g(r, k))) ++r;
      if (r == n) return ring_.zero();
      g.swap_rows(r, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Elem num = g(i, j) * g(k, k) - g(i, k) * g(k, j);
        Elem q, r;
        ring_.divmod(num, prev, q, r);
        g(i, j) = q;
      }
    prev = g(k, k);
  }
  Elem d = g(n - 1, n - 1);
  return negate ? Elem(-d) : d;
}

template class BasicQuadForm<IntegerRing>;
template class BasicQuadForm<PolyRing>;

template <class Ring>
std::vector<typename Ring::Elem> descent_step(const BasicQuadForm<Ring>& f, const std::vector<typename Ring::Elem>& a,
                                              const std::vector<typename Ring::Elem>& b) {
  const auto& ring = f.ring();
  if (!ring.is_zero(f.evaluate(a))) throw InvalidArgument("descent step needs an isotropic vector a");
  if (std::all_of(a.begin(), a.end(), [&](const auto& x) { return ring.is_zero(x); })) {
    throw InvalidArgument("descent step needs a nonzero vector a");
  }
  const auto fb = f.evaluate(b);
  if (ring.is_zero(fb)) throw InvalidArgument("descent step needs f(b) != 0");
  const auto ab = f.bilinear(a, b);
  std::vector<typename Ring::Elem> out(a.size(), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = fb * a[i] - ab * b[i];
  return out;
}

template std::vector<Integer> descent_step<IntegerRing>(const IntForm&, const std::vector<Integer>&,
                                                        const std::vector<Integer>&);
template std::vector<FpPoly> descent_step<PolyRing>(const PolyForm&, const std::vector<FpPoly>&,
                                                    const std::vector<FpPoly>&);

std::vector<Integer> primitive(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  std::vector<Integer> out;
  for (const auto& x : v) out.push_back(x / g);
  return out;
}

std::vector<FpPoly> primitive(const std::vector<FpPoly>& v) {
  if (v.empty()) return v;
  FpPoly g;
  bool any = false;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = any ? gcd(g, x) : monic(x);
    any = true;
  }
  if (!any) return v;
  std::vector<FpPoly> out;
  for (const auto& x : v) out.push_back(x.is_zero() ? x : x / g);
  return out;
}

Integer form_norm(const IntForm& f) {
  if (f.is_zero()) throw InvalidArgument("zero form has no norm");
  Integer s = 0;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t k = i; k < f.dim(); ++k) s += abs(f.coeff(i, k));
  return s;
}

long long form_degree(const PolyForm& f) {
  if (f.is_zero()) throw InvalidArgument("zero form has no degree");
  long long d = -1;
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t k = i; k < f.dim(); ++k) d = std::max(d, f.coeff(i, k).deg());
  return d;
}

Integer cassels_bound(const IntForm& f) {
  const Integer base = 3 * form_norm(f);
  const unsigned e = static_cast<unsigned>(f.dim() - 1);
  if (e % 2 == 0) return ipow(base, e / 2);
  // ceil(sqrt(base^e))
  const Integer full = ipow(base, e);
  Integer r = isqrt(full);
  return r * r == full ? r : Integer(r + 1);
}

bool within_cassels_bound(const IntForm& f, const std::vector<Integer>& v) {
  Integer mx = 0;
  for (const auto& x : v) mx = std::max(mx, Integer(abs(x)));
  return mx * mx <= ipow(3 * form_norm(f), f.dim() - 1);
}

long long prestel_bound(const PolyForm& f) {
  const long long d = form_degree(f);
  return (static_cast<long long>(f.dim()) - 1) * d / 2;
}

bool within_prestel_bound(const PolyForm& f, const std::vector<FpPoly>& v) {
  long long mx = -1;
  for (const auto& x : v) mx = std::max(mx, x.deg());
  return 2 * mx <= (static_cast<long long>(f.dim()) - 1) * form_degree(f);
}

bool is_definite(const IntForm& f) {
  const std::size_t n = f.dim();
  bool pos = true, neg = true;
  for (std::size_t k = 1; k <= n; ++k) {
    // Leading principal minor = disc of the form restricted to x_1..x_k.
    IntForm sub(IntegerRing{}, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) sub.add_term(i, j, f.coeff(i, j));
    const Integer d = sub.disc();
    if (d <= 0) pos = false;
    if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) neg = false;
  }
  return pos || neg;
}

namespace {

// Rank in the order 0, 1, -1, 2, -2, ...
template <class Int>
Int abs_rank(const Int& v) {
  return v > 0 ? Int(2 * v - 1) : Int(-2 * v);
}

template <class Int>
Int rank_value(const Int& r) {
  return r % 2 == 1 ? Int((r + 1) / 2) : Int(-(r / 2));
}

template <class Int>
Int iabs(const Int& v) {
  return v < 0 ? Int(-v) : v;
}

template <class Int>
struct Candidate {
  Int y;
  Int z;
};

// Search over Z: the coordinate j (diagonal m_jj != 0) is solved from the
// quadratic a z^2 + L z + Q = 0, coordinate yc runs along a row whose
// discriminant is scanned for perfect squares, the rest form the prefix.
template <class Int>
class ZSearch {
 public:
  ZSearch(const IntForm& f, std::size_t j, const Int& bound) : n_(f.dim()), j_(j), bound_(bound) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) m_.push_back(static_cast<Int>(i <= k ? f.coeff(i, k) : f.coeff(k, i)));
    for (std::size_t i = 0; i < n_; ++i)
      if (i != j_) others_.push_back(i);
    yc_ = others_.back();
    others_.pop_back();
  }

  // First hit in the canonical order (decide).
  std::optional<std::vector<Int>> first(bool simd) {
    std::optional<std::vector<Int>> out;
    run(simd, [&](const std::vector<Int>& pv, std::vector<Candidate<Int>>& cands, Int&) {
      auto best = std::min_element(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        if (abs_rank(a.y) != abs_rank(b.y)) return abs_rank(a.y) < abs_rank(b.y);
        return abs_rank(a.z) < abs_rank(b.z);
      });
      out = assemble(pv, *best);
      return true;
    });
    return out;
  }

  // Minimum by (max |v_i|, key) with dynamic pruning of the box.
  std::optional<std::vector<Int>> minimum() {
    std::optional<std::vector<Int>> best;
    Int best_size = 0;
    run(false, [&](const std::vector<Int>& pv, std::vector<Candidate<Int>>& cands, Int& lim) {
      for (const auto& c : cands) {
        auto v = assemble(pv, c);
        canonical_sign(v);
        Int size = 0;
        for (const auto& x : v) size = std::max(size, iabs(x));
        if (!best || size < best_size || (size == best_size && key_less(v, *best))) {
          best = v;
          best_size = size;
          lim = size;
        }
      }
      return false;
    });
    return best;
  }

 private:
  Int M(std::size_t i, std::size_t k) const { return m_[i * n_ + k]; }

  std::vector<Int> assemble(const std::vector<Int>& pv, const Candidate<Int>& c) const {
    std::vector<Int> v(n_, 0);
    for (std::size_t k = 0; k < others_.size(); ++k) v[others_[k]] = pv[k];
    v[yc_] = c.y;
    v[j_] = c.z;
    return v;
  }

  static void canonical_sign(std::vector<Int>& v) {
    for (std::size_t i = v.size(); i-- > 0;) {
      if (v[i] == 0) continue;
      if (v[i] < 0)
        for (auto& x : v) x = -x;
      return;
    }
  }

  static bool key_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return abs_rank(a[i]) < abs_rank(b[i]);
    }
    return false;
  }

  // Kernel call for one row; fills (y, root) pairs.
  void scan(Int alpha, Int beta, Int gamma, Int ylo, Int yhi, bool simd, std::vector<std::pair<Int, Int>>& hits) {
    hits.clear();
    if constexpr (std::is_same_v<Int, std::int64_t>) {
      constexpr std::size_t kChunk = 2048;
      std::int64_t hy[kChunk], hr[kChunk];
      for (std::int64_t y0 = ylo; y0 <= yhi; y0 += static_cast<std::int64_t>(kChunk)) {
        const auto count = static_cast<std::size_t>(std::min<std::int64_t>(kChunk, yhi - y0 + 1));
        kernels::SquareRow row{alpha, beta, gamma, y0, count};
        const std::size_t h = simd ? kernels::square_scan(row, hy, hr) : kernels::square_scan_scalar(row, hy, hr);
        for (std::size_t k = 0; k < h; ++k) hits.emplace_back(hy[k], hr[k]);
      }
    } else {
      for (Int y = ylo; y <= yhi; ++y) {
        Int d = (alpha * y + beta) * y + gamma;
        if (d >= 0 && is_square(d)) hits.emplace_back(y, isqrt(d));
      }
    }
  }

  // Visits prefixes in rank order with the first nonzero coordinate of
  // (prefix, y) positive. visit(pv, candidates, lim) returns true to stop and
  // may shrink lim.
  template <class Visit>
  void run(bool simd, Visit&& visit) {
    const std::size_t np = others_.size();
    Int lim = bound_;
    std::vector<Int> rank(np, 0), pv(np, 0);
    const Int a = M(j_, j_);
    const Int ly = M(yc_, j_) ;
    const Int q2 = M(yc_, yc_);
    std::vector<std::pair<Int, Int>> hits;
    std::vector<Candidate<Int>> cands;
    for (;;) {
      bool skip = false, zero_prefix = true;
      for (std::size_t k = 0; k < np; ++k) {
        pv[k] = rank_value(rank[k]);
        if (iabs(pv[k]) > lim) skip = true;
        if (zero_prefix && pv[k] != 0) {
          if (pv[k] < 0) skip = true;
          zero_prefix = false;
        }
      }
      if (!skip) {
        Int l0 = 0, q1 = 0, q0 = 0;
        for (std::size_t k = 0; k < np; ++k) {
          if (pv[k] == 0) continue;
          l0 += M(std::min(others_[k], j_), std::max(others_[k], j_)) * pv[k];
          q1 += M(std::min(others_[k], yc_), std::max(others_[k], yc_)) * pv[k];
          for (std::size_t l = k; l < np; ++l) q0 += M(others_[k], others_[l]) * pv[k] * pv[l];
        }
        const Int alpha = ly * ly - 4 * a * q2;
        const Int beta = 2 * l0 * ly - 4 * a * q1;
        const Int gamma = l0 * l0 - 4 * a * q0;
        scan(alpha, beta, gamma, zero_prefix ? Int(1) : Int(-lim), lim, simd, hits);
        cands.clear();
        const Int den = 2 * a;
        for (const auto& [y, s] : hits) {
          const Int lin = l0 + ly * y;
          for (int sg = 0; sg < (s == 0 ? 1 : 2); ++sg) {
            const Int num = sg == 0 ? Int(-lin + s) : Int(-lin - s);
            if (num % den != 0) continue;
            const Int z = num / den;
            if (iabs(z) <= lim) cands.push_back({y, z});
          }
        }
        if (!cands.empty() && visit(pv, cands, lim)) return;
      }
      // Advance the odometer; the last prefix coordinate varies fastest.
      std::size_t k = np;
      for (;;) {
        if (k == 0) return;
        --k;
        if (++rank[k] <= 2 * lim) break;
        rank[k] = 0;
      }
    }
  }

  std::size_t n_, j_, yc_ = 0;
  Int bound_;
  std::vector<Int> m_;
  std::vector<std::size_t> others_;
};

template <class Int>
std::vector<Integer> widen(const std::vector<Int>& v) {
  return std::vector<Integer>(v.begin(), v.end());
}

// int64 is safe when 16 |f|^2 B^2 < 2^50 (bounds every discriminant term).
bool fits_small(const IntForm& f, const Integer& bound) {
  const Integer fb = form_norm(f) * bound;
  return fb < (Integer(1) << 23);
}

void require_nonzero(const IntForm& f) {
  if (f.is_zero()) throw InvalidArgument("zero form rejected");
}

Integer candidate_count(const Integer& bound, std::size_t n) { return ipow(2 * bound + 1, n - 1); }

}  // namespace

IsotropyCertificate<Integer> decide_isotropy(const IntForm& f, const IsotropyOptions& opts) {
  require_nonzero(f);
  const std::size_t n = f.dim();
  IsotropyCertificate<Integer> cert;
  cert.bound = cassels_bound(f);
  for (std::size_t k = 0; k < n; ++k) {
    if (f.coeff(k, k) == 0) {
      cert.isotropic = true;
      cert.witness.assign(n, 0);
      cert.witness[k] = 1;
      return cert;
    }
  }
  if (n == 1) return cert;
  if (candidate_count(cert.bound, n) > opts.max_candidates) {
    throw SearchLimitExceeded("isotropy search bound too large: (2B+1)^(n-1) = " +
                              to_string(candidate_count(cert.bound, n)) + " candidates exceed the ceiling " +
                              to_string(opts.max_candidates));
  }
  std::optional<std::vector<Integer>> w;
  if (fits_small(f, cert.bound)) {
    ZSearch<std::int64_t> s(f, n - 1, static_cast<std::int64_t>(cert.bound));
    if (auto r = s.first(true)) w = widen(*r);
  } else {
    ZSearch<Integer> s(f, n - 1, cert.bound);
    w = s.first(false);
  }
  if (w) {
    cert.isotropic = true;
    cert.witness = *w;
  }
  return cert;
}

std::optional<std::vector<Integer>> brute_min_isotropic(const IntForm& f, const Integer& bound) {
  require_nonzero(f);
  const std::size_t n = f.dim();
  if (bound < 1) return std::nullopt;
  if (f.coeff(0, 0) == 0) {
    std::vector<Integer> e(n, 0);
    e[0] = 1;
    return e;
  }
  if (n == 1) return std::nullopt;
  std::size_t j = n - 1;
  while (f.coeff(j, j) == 0) --j;
  if (fits_small(f, bound)) {
    ZSearch<std::int64_t> s(f, j, static_cast<std::int64_t>(bound));
    auto r = s.minimum();
    if (!r) return std::nullopt;
    return widen(*r);
  }
  ZSearch<Integer> s(f, j, bound);
  return s.minimum();
}

namespace {

Integer max_abs(const std::vector<Integer>& v) {
  Integer m = 0;
  for (const auto& x : v) m = std::max(m, Integer(abs(x)));
  return m;
}

long long max_deg(const std::vector<FpPoly>& v) {
  long long m = -1;
  for (const auto& x : v) m = std::max(m, x.deg());
  return m;
}

}  // namespace

DescentTrace<Integer> minimize_isotropic(const IntForm& f, const std::vector<Integer>& seed) {
  require_nonzero(f);
  const std::size_t n = f.dim();
  if (seed.size() != n) throw InvalidArgument("seed length does not match the form");
  if (max_abs(seed) == 0) throw InvalidArgument("seed must be nonzero");
  if (f.evaluate(seed) != 0) throw InvalidArgument("seed is not isotropic");
  DescentTrace<Integer> trace;
  std::vector<Integer> a = primitive(seed);
  Integer size = max_abs(a);
  trace.sizes.push_back(size);
  const std::size_t max_steps = 2 + 64 * (msb(size) + 1);
  while (!within_cassels_bound(f, a)) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (abs(a[i]) > abs(a[k])) k = i;
    std::vector<Rational> theta;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) theta.push_back(ratio(a[i], a[k]));
    auto x = dioph_approx_int(theta, Rational(abs(a[k])));
    std::vector<Integer> b(n);
    for (std::size_t i = 0, t = 0; i < n; ++i) b[i] = i == k ? x.back() : x[t++];
    std::vector<Integer> next = f.evaluate(b) == 0 ? primitive(b) : primitive(descent_step(f, a, b));
    const Integer next_size = max_abs(next);
    if (next_size == 0 || next_size >= size) throw InternalError("descent failed to decrease max |a_i|");
    a = std::move(next);
    size = next_size;
    trace.sizes.push_back(size);
    if (trace.sizes.size() > max_steps) throw InternalError("descent exceeded its logarithmic step budget");
  }
  trace.witness = a;
  return trace;
}

namespace {

void require_odd(const PolyForm& f) {
  if (f.is_zero()) throw InvalidArgument("zero form rejected");
  if (f.ring().p == 2) throw InvalidArgument("quadratic forms over F_2[t] are not supported (characteristic 2)");
}

// Polynomials of degree <= d indexed by their base-p digit string.
FpPoly poly_from_index(std::uint64_t p, std::uint64_t idx, long long d) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(d + 1));
  for (auto& x : c) {
    x = idx % p;
    idx /= p;
  }
  return FpPoly(p, std::move(c));
}

Integer poly_count(std::uint64_t p, long long d) { return ipow(Integer(p), static_cast<unsigned long long>(d + 1)); }

// Roots z with deg z <= d of a z^2 + lin z + q = 0, smaller root first.
std::vector<FpPoly> quadratic_roots(const FpPoly& a, const FpPoly& lin, const FpPoly& q, long long d) {
  const std::uint64_t p = a.modulus();
  const FpPoly disc = lin * lin - a * q * FpPoly::constant(p, 4);
  auto s = sqrt_poly(disc);
  std::vector<FpPoly> out;
  if (!s) return out;
  const FpPoly two_a = a.scaled(2);
  for (int sg = 0; sg < (s->is_zero() ? 1 : 2); ++sg) {
    FpPoly num = sg == 0 ? FpPoly(-lin + *s) : FpPoly(-lin - *s);
    FpPoly qq, rr;
    divmod(num, two_a, qq, rr);
    if (rr.is_zero() && qq.deg() <= d) out.push_back(qq);
  }
  return out;
}

}  // namespace

IsotropyCertificate<FpPoly> decide_isotropy(const PolyForm& f, const IsotropyOptions& opts) {
  require_odd(f);
  const std::size_t n = f.dim();
  const std::uint64_t p = f.ring().p;
  IsotropyCertificate<FpPoly> cert;
  const long long d = prestel_bound(f);
  cert.bound = d;
  for (std::size_t k = 0; k < n; ++k) {
    if (f.coeff(k, k).is_zero()) {
      cert.isotropic = true;
      cert.witness.assign(n, f.ring().zero());
      cert.witness[k] = f.ring().one();
      return cert;
    }
  }
  if (n == 1) return cert;
  const Integer per = poly_count(p, d);
  if (ipow(per, n - 1) > opts.max_candidates) {
    throw SearchLimitExceeded("isotropy search bound too large: " + to_string(ipow(per, n - 1)) +
                              " candidates exceed the ceiling " + to_string(opts.max_candidates));
  }
  const auto per64 = static_cast<std::uint64_t>(per);
  const std::size_t j = n - 1;
  const FpPoly& a = f.coeff(j, j);
  std::vector<std::uint64_t> idx(n - 1, 0);
  std::vector<FpPoly> v(n, f.ring().zero());
  for (;;) {
    // First nonzero coordinate must be monic.
    bool ok = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      v[k] = poly_from_index(p, idx[k], d);
      if (!ok && !v[k].is_zero()) {
        if (v[k].lead() != 1) break;
        ok = true;
      }
    }
    if (ok) {
      FpPoly lin = f.ring().zero(), q = f.ring().zero();
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (v[k].is_zero()) continue;
        lin += f.coeff(k, j) * v[k];
        for (std::size_t l = k; l + 1 < n; ++l) q += f.coeff(k, l) * v[k] * v[l];
      }
      auto roots = quadratic_roots(a, lin, q, d);
      if (!roots.empty()) {
        v[j] = roots.front();
        cert.isotropic = true;
        cert.witness = v;
        return cert;
      }
    }
    std::size_t k = n - 1;
    for (;;) {
      if (k == 0) return cert;
      --k;
      if (++idx[k] < per64) break;
      idx[k] = 0;
    }
  }
}

std::optional<std::vector<FpPoly>> brute_min_isotropic(const PolyForm& f, long long bound) {
  require_odd(f);
  const std::size_t n = f.dim();
  const std::uint64_t p = f.ring().p;
  if (bound < 0) return std::nullopt;
  const auto per64 = static_cast<std::uint64_t>(poly_count(p, bound));
  std::vector<std::uint64_t> idx(n, 0);
  std::vector<FpPoly> v(n, f.ring().zero());
  std::optional<std::vector<FpPoly>> best;
  long long best_deg = 0;
  for (;;) {
    // Last nonzero coordinate monic.
    bool ok = false;
    for (std::size_t k = n; k-- > 0;) {
      v[k] = poly_from_index(p, idx[k], bound);
      if (!ok && !v[k].is_zero()) {
        ok = v[k].lead() == 1;
        if (!ok) break;
      }
    }
    if (ok && f.evaluate(v).is_zero()) {
      const long long dg = max_deg(v);
      if (!best || dg < best_deg) {
        best = v;
        best_deg = dg;
      }
    }
    std::size_t k = 0;
    while (k < n && ++idx[k] == per64) idx[k++] = 0;
    if (k == n) return best;
  }
}

DescentTrace<FpPoly> minimize_isotropic(const PolyForm& f, const std::vector<FpPoly>& seed) {
  require_odd(f);
  const std::size_t n = f.dim();
  const std::uint64_t p = f.ring().p;
  if (seed.size() != n) throw InvalidArgument("seed length does not match the form");
  if (max_deg(seed) < 0) throw InvalidArgument("seed must be nonzero");
  if (!f.evaluate(seed).is_zero()) throw InvalidArgument("seed is not isotropic");
  DescentTrace<FpPoly> trace;
  std::vector<FpPoly> a = primitive(seed);
  long long size = max_deg(a);
  trace.sizes.emplace_back(size);
  const std::size_t max_steps = static_cast<std::size_t>(size) + 2;
  while (!within_prestel_bound(f, a)) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (a[i].deg() > a[k].deg()) k = i;
    std::vector<RatFunc> theta;
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) theta.emplace_back(a[i], a[k]);
    auto x = dioph_approx_poly(p, theta, a[k].deg());
    std::vector<FpPoly> b(n, f.ring().zero());
    for (std::size_t i = 0, t = 0; i < n; ++i) b[i] = i == k ? x.back() : x[t++];
    std::vector<FpPoly> next = f.evaluate(b).is_zero() ? primitive(b) : primitive(descent_step(f, a, b));
    const long long next_size = max_deg(next);
    if (next_size < 0 || next_size >= size) throw InternalError("descent failed to decrease max deg a_i");
    a = std::move(next);
    size = next_size;
    trace.sizes.emplace_back(size);
    if (trace.sizes.size() > max_steps) throw InternalError("descent exceeded its step budget");
  }
  trace.witness = a;
  return trace;
}

}  // namespace gon
