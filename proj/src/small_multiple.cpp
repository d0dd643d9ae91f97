#include "gon/small_multiple.hpp"

#include <algorithm>

#include "gon/errors.hpp"
#include "gon/linear_forms.hpp"
#include "gon/modsqrt.hpp"

namespace gon {

std::string route_name(HypothesisRoute r) {
  switch (r) {
    case HypothesisRoute::H1: return "H1";
    case HypothesisRoute::H2: return "H2";
    case HypothesisRoute::DirectHyperbolicWitness: return "DirectHyperbolicWitness";
  }
  return "?";
}

namespace {

// Arithmetic in R / pi^e together with the residue field R / pi.
template <class Ring>
struct Residue {
  using Elem = typename Ring::Elem;

  Ring ring;
  Elem pi;
  unsigned e;
  Elem mod;
  Integer field_size;

  Residue(const Ring& r, const Elem& prime, unsigned exponent)
      : ring(r), pi(prime), e(exponent), mod(r.one()), field_size(r.norm(prime)) {
    for (unsigned i = 0; i < e; ++i) mod = mod * pi;
  }

  Elem red(const Elem& a) const { return rem(a, mod); }
  Elem red_pi(const Elem& a) const { return rem(a, pi); }
  bool is_unit(const Elem& a) const { return !ring.is_zero(red_pi(a)); }

  Elem rem(const Elem& a, const Elem& m) const {
    Elem q, r;
    ring.divmod(a, m, q, r);
    return r;
  }

  // Inverse of a unit modulo m.
  Elem inv(const Elem& a, const Elem& m) const {
    Elem old_r = rem(a, m), r = m, old_s = ring.one(), s = ring.zero();
    while (!ring.is_zero(r)) {
      Elem q, t;
      ring.divmod(old_r, r, q, t);
      old_r = r;
      r = t;
      Elem ns = old_s - q * s;
      old_s = s;
      s = ns;
    }
    if (!ring.is_unit(old_r)) throw InternalError("inverting a non-unit residue");
    return rem(old_s * ring.unit_inverse(old_r), m);
  }
  Elem inv(const Elem& a) const { return inv(a, mod); }

  Elem field_pow(Elem a, Integer k) const {
    Elem r = ring.one();
    a = red_pi(a);
    while (k > 0) {
      if ((k & 1) != 0) r = red_pi(r * a);
      k >>= 1;
      if (k > 0) a = red_pi(a * a);
    }
    return red_pi(r);
  }

  Elem field_element(Integer idx) const;
  Integer field_index(const Elem& a) const;

  // Tonelli-Shanks in R / pi (odd size q).
  std::optional<Elem> field_sqrt(const Elem& a_in) const {
    const Elem a = red_pi(a_in);
    if (ring.is_zero(a)) return a;
    const Integer q1 = field_size - 1;
    if (field_pow(a, q1 / 2) != ring.one()) return std::nullopt;
    Integer odd = q1;
    unsigned s = 0;
    while ((odd & 1) == 0) {
      odd >>= 1;
      ++s;
    }
    const Elem minus_one = red_pi(-ring.one());
    Elem z;
    for (Integer i = 2;; ++i) {
      z = field_element(i);
      if (field_pow(z, q1 / 2) == minus_one) break;
    }
    unsigned m = s;
    Elem c = field_pow(z, odd), t = field_pow(a, odd), r = field_pow(a, (odd + 1) / 2);
    while (t != ring.one()) {
      unsigned i = 0;
      Elem t2 = t;
      while (t2 != ring.one()) {
        t2 = red_pi(t2 * t2);
        ++i;
      }
      Elem b = c;
      for (unsigned j = 0; j + i + 1 < m; ++j) b = red_pi(b * b);
      m = i;
      c = red_pi(b * b);
      t = red_pi(t * c);
      r = red_pi(r * b);
    }
    return r;
  }

  // Square root mod pi^e of a unit, by Newton doubling from the field root.
  std::optional<Elem> sqrt(const Elem& a_in) const {
    const Elem a = red(a_in);
    auto r0 = field_sqrt(a);
    if (!r0) return std::nullopt;
    Elem r = *r0;
    for (unsigned guard = 0; red(r * r - a) != ring.zero(); ++guard) {
      if (guard > 64) throw InternalError("square root lift did not converge");
      r = red(r - (r * r - a) * inv(r + r));
    }
    return r;
  }
};

template <>
Integer Residue<IntegerRing>::field_element(Integer idx) const {
  return idx;
}

template <>
Integer Residue<IntegerRing>::field_index(const Integer& a) const {
  return a;
}

template <>
Integer Residue<PolyRing>::field_index(const FpPoly& a) const {
  Integer idx = 0;
  for (long long i = a.deg(); i >= 0; --i) idx = idx * ring.p + a.coeff(static_cast<std::size_t>(i));
  return idx;
}

template <>
FpPoly Residue<PolyRing>::field_element(Integer idx) const {
  std::vector<std::uint64_t> c;
  const Integer p = ring.p;
  for (long long i = 0; i < pi.deg(); ++i) {
    c.push_back(static_cast<std::uint64_t>(idx % p));
    idx /= p;
  }
  return FpPoly(ring.p, std::move(c));
}

template <class Ring>
using ElemOf = typename Ring::Elem;

template <class Ring>
std::vector<std::pair<ElemOf<Ring>, unsigned>> prime_powers(const Ring& ring, const ElemOf<Ring>& d);

template <>
std::vector<std::pair<Integer, unsigned>> prime_powers(const IntegerRing&, const Integer& d) {
  if (abs(d) == 1) return {};
  return factor_integer(d);
}

template <>
std::vector<std::pair<FpPoly, unsigned>> prime_powers(const PolyRing&, const FpPoly& d) {
  if (d.deg() == 0) return {};
  return factor_poly(d);
}

template <class Ring>
const char* prime_name();
template <>
const char* prime_name<IntegerRing>() {
  return "p";
}
template <>
const char* prime_name<PolyRing>() {
  return "pi";
}

// Global square test for the H2 route.
bool is_global_square(const Integer& a) { return is_square(a); }
bool is_global_square(const FpPoly& a) { return a.is_zero() || sqrt_poly(a).has_value(); }

void validate_d(const IntegerRing&, const Integer& d) {
  if (d == 0) throw InvalidArgument("d must be nonzero");
  if (d % 2 == 0) throw PreconditionError("d must be odd (I coprime to 2R); got d = " + to_string(d));
}

void validate_d(const PolyRing& ring, const FpPoly& d) {
  if (ring.p == 2) throw InvalidArgument("characteristic 2 is not supported for small multiples");
  if (d.is_zero()) throw InvalidArgument("d must be nonzero");
}

template <class Ring>
HypothesisReport<ElemOf<Ring>> check_h(const BasicQuadForm<Ring>& f, const ElemOf<Ring>& d) {
  using Elem = ElemOf<Ring>;
  const Ring& ring = f.ring();
  const std::size_t n = f.dim();
  validate_d(ring, d);
  if (n % 2 != 0) throw PreconditionError("n must be even for a hyperbolic base change; got n = " + std::to_string(n));
  const Elem disc = f.disc();
  if (ring.is_zero(disc)) throw PreconditionError("form is degenerate (disc f = 0)");
  if (!ring.is_unit(ring.gcd(d, disc))) {
    throw PreconditionError("d must be coprime to disc f = " + ring.to_string(disc));
  }
  // (-1)^(n/2) disc and 2^n; d(q) = disc / 2^n.
  const Elem signed_disc = (n / 2) % 2 == 1 ? Elem(-disc) : disc;
  Elem two_n = ring.one();
  for (std::size_t i = 0; i < n; ++i) two_n = two_n * ring.from_int(2);

  HypothesisReport<Elem> rep;
  rep.holds = true;
  for (const auto& [pi, e] : prime_powers(ring, d)) {
    Residue<Ring> res(ring, pi, e);
    const Elem target = res.red(signed_disc * res.inv(two_n));
    auto root = res.sqrt(target);
    if (!root) {
      rep.holds = false;
      rep.reason = std::string("(-1)^(n/2) d(q) = ") + ring.to_string(target) + " is not a square modulo " +
                   prime_name<Ring>() + " = " + ring.to_string(pi);
      rep.details.clear();
      return rep;
    }
    Elem r = *root;
    if constexpr (std::is_same_v<Ring, IntegerRing>) r = std::min(r, Integer(res.mod - r));
    rep.details.push_back({pi, e, r});
  }
  if (n == 2) {
    rep.route = HypothesisRoute::H1;
  } else if (is_global_square(signed_disc)) {
    rep.route = HypothesisRoute::H2;
  } else {
    rep.route = HypothesisRoute::DirectHyperbolicWitness;
  }
  return rep;
}

template <class Ring>
struct Tracked {
  std::vector<ElemOf<Ring>> x;  // ambient coordinates mod N
  std::vector<ElemOf<Ring>> c;  // coordinates in the current basis W
};

template <class Ring>
HyperbolicBasis<ElemOf<Ring>> hyperbolic_basis(const BasicQuadForm<Ring>& f, const ElemOf<Ring>& pi, unsigned e) {
  using Elem = ElemOf<Ring>;
  using Vec = std::vector<Elem>;
  const Ring& ring = f.ring();
  const std::size_t n = f.dim();
  if (n % 2 != 0) throw PreconditionError("n must be even for a hyperbolic basis");
  if (e == 0) throw InvalidArgument("exponent must be at least 1");
  const Residue<Ring> res(ring, pi, e);
  auto red_vec = [&](Vec v) {
    for (auto& x : v) x = res.red(x);
    return v;
  };
  auto fq = [&](const Vec& v) { return res.red(f.evaluate(v)); };
  auto bil = [&](const Vec& a, const Vec& b) { return res.red(f.bilinear(a, b)); };
  auto combo = [&](const std::vector<Vec>& w, const Vec& c) {
    Vec out(n, ring.zero());
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) out[j] += c[i] * w[i][j];
    return red_vec(out);
  };

  std::vector<Vec> w;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei(n, ring.zero());
    ei[i] = ring.one();
    w.push_back(ei);
  }
  HyperbolicBasis<Elem> out;
  while (!w.empty()) {
    const std::size_t m = w.size();
    // Lexicographically first isotropic coefficient vector mod pi: the last
    // basis vector if it is isotropic, otherwise scan the first m - 1
    // coordinates and solve the quadratic for the last.
    Vec cu;
    if (res.red_pi(f.evaluate(w[m - 1])) == ring.zero()) {
      cu.assign(m, ring.zero());
      cu[m - 1] = ring.one();
    } else {
      std::vector<std::vector<Elem>> g(m, Vec(m, ring.zero()));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = i; k < m; ++k) g[i][k] = res.red_pi(i == k ? f.evaluate(w[i]) : f.bilinear(w[i], w[k]));
      const Elem a = g[m - 1][m - 1];
      const Elem inv2a = res.inv(a + a, pi);
      std::vector<Integer> idx(m - 1, 0);
      Vec c(m, ring.zero());
      for (;;) {
        // Advance the odometer (last prefix coordinate fastest); the zero
        // prefix only gives the zero vector.
        std::size_t k = m - 1;
        for (;;) {
          if (k == 0) throw InternalError("no isotropic vector mod " + ring.to_string(pi) + " although (H) holds");
          --k;
          if (++idx[k] < res.field_size) break;
          idx[k] = 0;
        }
        for (std::size_t i = 0; i + 1 < m; ++i) c[i] = res.field_element(idx[i]);
        Elem lin = ring.zero(), q = ring.zero();
        for (std::size_t i = 0; i + 1 < m; ++i) {
          lin += g[i][m - 1] * c[i];
          for (std::size_t l = i; l + 1 < m; ++l) q += g[i][l] * c[i] * c[l];
        }
        lin = res.red_pi(lin);
        auto s = res.field_sqrt(lin * lin - a * q * ring.from_int(4));
        if (!s) continue;
        const Elem r1 = res.red_pi((*s - lin) * inv2a), r2 = res.red_pi((-*s - lin) * inv2a);
        c[m - 1] = res.field_index(r1) <= res.field_index(r2) ? r1 : r2;
        cu = c;
        break;
      }
    }
    Tracked<Ring> u{combo(w, cu), cu};
    // Partner direction with a unit pairing.
    std::size_t b = m;
    for (std::size_t i = 0; i < m && b == m; ++i)
      if (res.is_unit(bil(u.x, w[i]))) b = i;
    if (b == m) throw InternalError("form is singular mod " + ring.to_string(pi));
    // Hensel: Newton along u + t w_b, doubling the precision each step.
    for (unsigned guard = 0; fq(u.x) != ring.zero(); ++guard) {
      if (guard > 64) throw InternalError("Hensel lift did not converge");
      const Elem t = res.red(-fq(u.x) * res.inv(bil(u.x, w[b])));
      for (std::size_t j = 0; j < n; ++j) u.x[j] = res.red(u.x[j] + t * w[b][j]);
      u.c[b] = res.red(u.c[b] + t);
    }
    // Partner v with f(v) = 0 and <u, v> = 1.
    const Elem lambda = res.inv(bil(u.x, w[b]));
    Tracked<Ring> v{Vec(n), Vec(m, ring.zero())};
    for (std::size_t j = 0; j < n; ++j) v.x[j] = res.red(lambda * w[b][j]);
    v.c[b] = lambda;
    const Elem fv = fq(v.x);
    for (std::size_t j = 0; j < n; ++j) v.x[j] = res.red(v.x[j] - fv * u.x[j]);
    for (std::size_t i = 0; i < m; ++i) v.c[i] = res.red(v.c[i] - fv * u.c[i]);
    if (fq(v.x) != ring.zero() || bil(u.x, v.x) != res.red(ring.one())) {
      throw InternalError("hyperbolic pair completion failed");
    }
    out.e.push_back(u.x);
    out.f.push_back(v.x);
    // Drop two basis vectors that u, v can replace, project the rest onto
    // the orthogonal complement of the plane.
    std::size_t da = m, db = m;
    for (std::size_t i = 0; i < m && da == m; ++i)
      for (std::size_t k = i + 1; k < m; ++k)
        if (res.is_unit(u.c[i] * v.c[k] - u.c[k] * v.c[i])) {
          da = i;
          db = k;
          break;
        }
    if (da == m) throw InternalError("hyperbolic plane is degenerate");
    std::vector<Vec> next;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == da || i == db) continue;
      const Elem bv = bil(w[i], v.x), bu = bil(w[i], u.x);
      Vec x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = res.red(w[i][j] - bv * u.x[j] - bu * v.x[j]);
      next.push_back(std::move(x));
    }
    w = std::move(next);
  }
  return out;
}

template <class Ring>
BasicLattice<Ring> lattice_mod(const BasicQuadForm<Ring>& f, const ElemOf<Ring>& d) {
  using Elem = ElemOf<Ring>;
  const Ring& ring = f.ring();
  auto rep = check_h(f, d);
  if (!rep.holds) throw PreconditionError("hypothesis (H) fails: " + rep.reason);
  const std::size_t n = f.dim();
  auto out = BasicLattice<Ring>::standard(ring, n);
  for (const auto& w : rep.details) {
    auto hb = hyperbolic_basis(f, w.prime, w.exponent);
    Elem mod = ring.one();
    for (unsigned i = 0; i < w.exponent; ++i) mod = mod * w.prime;
    Matrix<Elem> gens(n, n / 2 + n, ring.zero());
    for (std::size_t i = 0; i < n / 2; ++i)
      for (std::size_t j = 0; j < n; ++j) gens(j, i) = hb.e[i][j];
    for (std::size_t j = 0; j < n; ++j) gens(j, n / 2 + j) = mod;
    out = out.intersect(BasicLattice<Ring>(ring, gens));
  }
  return out;
}

bool nontrivial(const std::vector<Integer>& v) {
  return std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
}

void require_anisotropic(const IntForm& f, const IsotropyOptions& opts) {
  if (is_definite(f)) return;
  auto cert = decide_isotropy(f, opts);
  if (cert.isotropic) throw PreconditionError("form is isotropic; the small multiple theorem needs anisotropic f");
}

void require_anisotropic(const PolyForm& f, const IsotropyOptions& opts) {
  auto cert = decide_isotropy(f, opts);
  if (cert.isotropic) throw PreconditionError("form is isotropic; the small multiple theorem needs anisotropic f");
}

}  // namespace

HypothesisReport<Integer> check_hypothesis_H(const IntForm& f, const Integer& d) { return check_h(f, d); }
HypothesisReport<FpPoly> check_hypothesis_H(const PolyForm& f, const FpPoly& d) { return check_h(f, d); }

HyperbolicBasis<Integer> hyperbolic_basis_mod(const IntForm& f, const Integer& prime, unsigned exponent) {
  if (prime < 3 || !is_prime(prime)) throw InvalidArgument("hyperbolic basis needs an odd prime");
  return hyperbolic_basis(f, prime, exponent);
}

HyperbolicBasis<FpPoly> hyperbolic_basis_mod(const PolyForm& f, const FpPoly& prime, unsigned exponent) {
  if (f.ring().p == 2) throw InvalidArgument("characteristic 2 is not supported");
  if (prime.deg() < 1 || prime.lead() != 1 || !is_irreducible(prime)) {
    throw InvalidArgument("hyperbolic basis needs a monic irreducible polynomial");
  }
  return hyperbolic_basis(f, prime, exponent);
}

IntLattice hyperbolic_lattice_mod(const IntForm& f, const Integer& d) { return lattice_mod(f, d); }
PolyLattice hyperbolic_lattice_mod(const PolyForm& f, const FpPoly& d) { return lattice_mod(f, d); }

MultipleCertificate<Integer> small_multiple_int(const IntForm& f, const Integer& d, const IsotropyOptions& opts) {
  MultipleCertificate<Integer> cert;
  cert.hypothesis = check_hypothesis_H(f, d);
  if (!cert.hypothesis.holds) throw PreconditionError("hypothesis (H) fails: " + cert.hypothesis.reason);
  require_anisotropic(f, opts);
  const std::size_t n = f.dim();
  const IntLattice lat = hyperbolic_lattice_mod(f, d);
  // |v_i|^2 < |d| for i < n, |v_n|^2 <= |d|: prod eps = |d|^(n/2) = covol.
  IntBox box;
  for (std::size_t i = 0; i < n; ++i) box.bounds.push_back(Bound{Rational(abs(d)), 2, i + 1 < n});
  auto v = solve_box_int(lat, box);
  if (!v || !nontrivial(*v)) throw InternalError("box solver failed at the covolume threshold");
  const Integer fv = f.evaluate(*v);
  if (fv % d != 0) throw InternalError("f(v) is not divisible by d on Lambda_d");
  cert.v = *v;
  cert.d = d;
  cert.k = fv / d;
  cert.bound = form_norm(f);
  cert.bound_ok = cert.k != 0 && abs(cert.k) < cert.bound;
  return cert;
}

MultipleCertificate<FpPoly> small_multiple_poly(const PolyForm& f, const FpPoly& d, const IsotropyOptions& opts) {
  MultipleCertificate<FpPoly> cert;
  cert.hypothesis = check_hypothesis_H(f, d);
  if (d.deg() < 1) throw PreconditionError("d must be a nonunit");
  if (!cert.hypothesis.holds) throw PreconditionError("hypothesis (H) fails: " + cert.hypothesis.reason);
  require_anisotropic(f, opts);
  const auto n = static_cast<long long>(f.dim());
  const PolyLattice lat = hyperbolic_lattice_mod(f, d);
  // e = ceil(((n/2) deg d - (n - 1)) / n), never negative.
  const long long num = (n / 2) * d.deg() - (n - 1);
  const long long e = num >= 0 ? (num + n - 1) / n : -((-num) / n);
  auto v = solve_box_poly(lat, std::vector<long long>(f.dim(), e));
  if (!v) throw InternalError("box solver failed at the covolume threshold");
  const FpPoly fv = f.evaluate(*v);
  FpPoly k, r;
  divmod(fv, d, k, r);
  if (!r.is_zero()) throw InternalError("f(v) is not divisible by d on Lambda_d");
  cert.v = *v;
  cert.d = d;
  cert.k = k;
  cert.bound = form_degree(f);
  cert.bound_ok = !k.is_zero() && k.deg() <= form_degree(f);
  return cert;
}

std::array<Integer, 4> euler_product(const std::array<Integer, 4>& a, const std::array<Integer, 4>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

namespace {

Integer sum_sq(const std::array<Integer, 4>& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]; }

std::array<Integer, 4> prime_four_square(const Integer& p) {
  if (p == 2) return {1, 1, 0, 0};
  if (p == 3) return {1, 1, 1, 0};
  static const IntForm sum4(IntegerRing{}, 4, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}});
  auto cert = small_multiple_int(sum4, p);
  std::array<Integer, 4> x{cert.v[0], cert.v[1], cert.v[2], cert.v[3]};
  std::array<Integer, 4> out;
  if (cert.k == 1) {
    out = x;
  } else if (cert.k == 2) {
    // Pair coordinates of equal parity.
    std::vector<Integer> odd, even;
    for (const auto& c : x) (c % 2 != 0 ? odd : even).push_back(c);
    std::vector<Integer> ord = odd;
    ord.insert(ord.end(), even.begin(), even.end());
    out = {(ord[0] + ord[1]) / 2, (ord[0] - ord[1]) / 2, (ord[2] + ord[3]) / 2, (ord[2] - ord[3]) / 2};
  } else if (cert.k == 3) {
    // Exactly one coordinate is divisible by 3 (p != 3); move it first and
    // flip the signs of the others to 1 mod 3.
    auto zero = std::find_if(x.begin(), x.end(), [](const Integer& c) { return c % 3 == 0; });
    std::iter_swap(x.begin(), zero);
    for (std::size_t i = 1; i < 4; ++i)
      if (mod_floor(x[i], 3) != 1) x[i] = -x[i];
    out = {(x[1] + x[2] + x[3]) / 3, (x[0] + x[2] - x[3]) / 3, (x[0] - x[1] + x[3]) / 3, (x[0] + x[1] - x[2]) / 3};
  } else {
    throw InternalError("small multiple outside 0 < k < 4");
  }
  if (sum_sq(out) != p) throw InternalError("four-square reduction failed for p = " + to_string(p));
  return out;
}

}  // namespace

std::array<Integer, 4> four_square(const Integer& n) {
  if (n < 1) throw InvalidArgument("four_square needs n >= 1");
  std::array<Integer, 4> acc{1, 0, 0, 0};
  for (const auto& [p, e] : factor_integer(n)) {
    const auto rep = prime_four_square(p);
    for (unsigned i = 0; i < e; ++i) acc = euler_product(acc, rep);
  }
  for (auto& c : acc) c = abs(c);
  std::sort(acc.begin(), acc.end(), std::greater<>());
  if (sum_sq(acc) != n) throw InternalError("four-square composition failed");
  return acc;
}

}  // namespace gon
