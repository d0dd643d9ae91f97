#include "gon/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "gon/errors.hpp"

namespace gon {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

}  // namespace

std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(p));
  return fp_pow(a, p - 2, p);
}

std::optional<std::uint64_t> fp_sqrt(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (fp_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (fp_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = fp_pow(z, q, p);
  std::uint64_t t = fp_pow(a, q, p);
  std::uint64_t r = fp_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

FpPoly::FpPoly(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= kMaxPrime) throw InvalidArgument("field characteristic out of range");
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : FpPoly(p) {
  c_ = std::move(coeffs);
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::from_signed(std::uint64_t p, std::span<const std::int64_t> coeffs) {
  std::vector<std::uint64_t> c;
  c.reserve(coeffs.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (auto x : coeffs) c.push_back(static_cast<std::uint64_t>(((x % sp) + sp) % sp));
  return FpPoly(p, std::move(c));
}

FpPoly FpPoly::constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint64_t p, std::uint64_t c, std::size_t k) {
  std::vector<std::uint64_t> v(k + 1, 0);
  v[k] = c;
  return FpPoly(p, std::move(v));
}

Degree FpPoly::degree() const { return c_.empty() ? Degree::neg_infinity() : Degree(deg()); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void FpPoly::check_same_field(const FpPoly& o) const {
  if (p_ != o.p_ && p_ != 0 && o.p_ != 0) throw InvalidArgument("polynomials over different prime fields");
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  check_same_field(o);
  if (p_ == 0) p_ = o.p_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    c_[i] += o.c_[i];
    if (c_[i] >= p_) c_[i] -= p_;
  }
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  check_same_field(o);
  if (p_ == 0) p_ = o.p_;
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = (c_[i] + p_ - o.c_[i]) % p_;
  trim();
  return *this;
}

FpPoly& FpPoly::operator*=(const FpPoly& o) {
  *this = *this * o;
  return *this;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  a.check_same_field(b);
  FpPoly r;
  r.p_ = a.p_ != 0 ? a.p_ : b.p_;
  if (a.c_.empty() || b.c_.empty()) return r;
  const std::uint64_t p = r.p_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = (r.c_[i + j] + a.c_[i] * b.c_[j]) % p;
    }
  }
  r.trim();
  return r;
}

FpPoly FpPoly::operator-() const {
  FpPoly r = *this;
  for (auto& x : r.c_) x = x == 0 ? 0 : p_ - x;
  return r;
}

FpPoly FpPoly::scaled(std::uint64_t s) const {
  FpPoly r = *this;
  s %= p_;
  for (auto& x : r.c_) x = mulmod(x, s, p_);
  r.trim();
  return r;
}

FpPoly FpPoly::shifted(std::size_t k) const {
  FpPoly r = *this;
  if (!r.c_.empty()) r.c_.insert(r.c_.begin(), k, 0);
  return r;
}

std::uint64_t FpPoly::evaluate(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x % p_, p_) + *it) % p_;
  return acc;
}

std::string FpPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const std::uint64_t p = b.modulus();
  if (a.modulus() != 0 && a.modulus() != p) throw InvalidArgument("polynomials over different prime fields");
  std::vector<std::uint64_t> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) {
    q = FpPoly(p);
    r = FpPoly(p, std::move(rem));
    return;
  }
  std::vector<std::uint64_t> quot(rem.size() - db, 0);
  const std::uint64_t inv = fp_inverse(bc.back(), p);
  for (std::size_t k = rem.size(); k-- > db;) {
    const std::uint64_t c = mulmod(rem[k], inv, p);
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = (rem[k - db + j] + p - mulmod(c, bc[j], p)) % p;
  }
  rem.resize(db);
  q = FpPoly(p, std::move(quot));
  r = FpPoly(p, std::move(rem));
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  divmod(a, b, q, r);
  return q;
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  divmod(a, b, q, r);
  return r;
}

FpPoly monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  return a.scaled(fp_inverse(a.lead(), a.modulus()));
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

FpPoly lcm(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.modulus() ? a.modulus() : b.modulus());
  return monic(a / gcd(a, b) * b);
}

FpPoly derivative(const FpPoly& a) {
  if (a.coeffs().size() <= 1) return FpPoly(a.modulus());
  std::vector<std::uint64_t> d(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) d[i - 1] = mulmod(a.coeffs()[i], i % a.modulus(), a.modulus());
  return FpPoly(a.modulus(), std::move(d));
}

FpPoly pow(const FpPoly& a, unsigned long long e) {
  FpPoly r = FpPoly::constant(a.modulus(), 1), b = a;
  while (e != 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return r;
}

FpPoly pow_mod(const FpPoly& a, const Integer& e, const FpPoly& m) {
  FpPoly r = FpPoly::constant(a.modulus(), 1) % m, b = a % m;
  Integer k = e;
  while (k != 0) {
    if ((k & 1) != 0) r = r * b % m;
    k >>= 1;
    if (k != 0) b = b * b % m;
  }
  return r;
}

namespace {

bool poly_less(const FpPoly& a, const FpPoly& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
}

// p-th root of a polynomial whose derivative vanishes.
FpPoly frobenius_root(const FpPoly& a) {
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < a.coeffs().size(); i += p) c.push_back(a.coeffs()[i]);
  return FpPoly(p, std::move(c));
}

void square_free(const FpPoly& f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>>& out) {
  const auto p = f.modulus();
  const FpPoly one = FpPoly::constant(p, 1);
  if (f.deg() <= 0) return;
  FpPoly c = gcd(f, derivative(f));
  FpPoly w = monic(f) / c;
  unsigned i = 1;
  while (!(w == one)) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.deg() > 0) out.emplace_back(monic(fac), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.deg() > 0) square_free(frobenius_root(monic(c)), mult * static_cast<unsigned>(p), out);
}

void equal_degree(const FpPoly& f, long long d, std::mt19937_64& gen, std::vector<FpPoly>& out) {
  const auto p = f.modulus();
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  const FpPoly one = FpPoly::constant(p, 1);
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.deg()));
    for (auto& x : c) x = dist(gen);
    FpPoly a(p, std::move(c));
    if (a.deg() <= 0) continue;
    FpPoly g = gcd(a, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, gen, out);
      equal_degree(f / g, d, gen, out);
      return;
    }
    FpPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      b = a % f;
      FpPoly term = b;
      for (long long k = 1; k < d; ++k) {
        term = term * term % f;
        b += term;
      }
    } else {
      Integer e = (ipow(Integer(p), static_cast<unsigned long long>(d)) - 1) / 2;
      b = pow_mod(a, e, f) - one;
    }
    g = gcd(b, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, gen, out);
      equal_degree(f / g, d, gen, out);
      return;
    }
  }
}

// Factors a monic square-free polynomial.
void factor_square_free(const FpPoly& f, std::vector<FpPoly>& out) {
  const auto p = f.modulus();
  const FpPoly tpoly = FpPoly::t(p);
  std::mt19937_64 gen(0xC0FFEEULL + p);
  FpPoly rest = f;
  FpPoly h = tpoly % rest;
  for (long long d = 1; rest.deg() >= 2 * d; ++d) {
    h = pow_mod(h, Integer(p), rest);
    FpPoly g = gcd(h - tpoly, rest);
    if (g.deg() > 0) {
      equal_degree(g, d, gen, out);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.deg() > 0) out.push_back(rest);
}

}  // namespace

std::vector<std::pair<FpPoly, unsigned>> factor_poly(const FpPoly& a) {
  if (a.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  square_free(monic(a), 1, sqf);
  std::vector<std::pair<FpPoly, unsigned>> out;
  for (const auto& [g, m] : sqf) {
    std::vector<FpPoly> irr;
    factor_square_free(g, irr);
    for (auto& q : irr) out.emplace_back(monic(q), m);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

bool is_irreducible(const FpPoly& a) {
  if (a.deg() <= 0) return false;
  auto f = factor_poly(a);
  return f.size() == 1 && f[0].second == 1;
}

std::optional<FpPoly> sqrt_poly(const FpPoly& a) {
  const auto p = a.modulus();
  if (p == 2) throw InvalidArgument("sqrt_poly requires odd characteristic");
  if (a.is_zero()) return a;
  if (a.deg() % 2 != 0) return std::nullopt;
  auto lead_root = fp_sqrt(a.lead(), p);
  if (!lead_root) return std::nullopt;
  const std::size_t half = static_cast<std::size_t>(a.deg() / 2);
  std::vector<std::uint64_t> r(half + 1, 0);
  r[half] = *lead_root;
  const std::uint64_t inv2r = fp_inverse(mulmod(2, r[half], p), p);
  // Coefficient of t^(2*half - k) in r^2 determines r[half - k].
  for (std::size_t k = 1; k <= half; ++k) {
    const std::size_t target = 2 * half - k;
    std::uint64_t s = 0;
    for (std::size_t i = half - k + 1; i <= half; ++i) {
      const std::size_t j = target - i;
      if (j < half - k + 1 || j > half) continue;
      s = (s + mulmod(r[i], r[j], p)) % p;
    }
    const std::uint64_t rhs = (a.coeff(target) + p - s) % p;
    r[half - k] = mulmod(rhs, inv2r, p);
  }
  FpPoly root(p, std::move(r));
  if (!(root * root == a)) return std::nullopt;
  return root;
}

RatFunc::RatFunc(const FpPoly& poly) : num(poly), den(FpPoly::constant(poly.modulus(), 1)) {}

RatFunc::RatFunc(const FpPoly& n, const FpPoly& d) {
  if (d.is_zero()) throw InvalidArgument("rational function with zero denominator");
  FpPoly g = gcd(n, d);
  if (n.is_zero()) g = monic(d);
  num = n / g;
  den = d / g;
  const auto inv = fp_inverse(den.lead(), den.modulus());
  num = num.scaled(inv);
  den = den.scaled(inv);
}

Degree RatFunc::degree() const {
  if (num.is_zero()) return Degree::neg_infinity();
  return Degree(num.deg() - den.deg());
}

}  // namespace gon
