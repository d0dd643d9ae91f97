#include "gon/integer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "gon/errors.hpp"

namespace gon {

namespace mp = boost::multiprecision;

Integer isqrt(const Integer& n) {
  if (n < 0) throw InvalidArgument("isqrt of a negative integer");
  return mp::sqrt(n);
}

Integer iroot(const Integer& n, unsigned k) {
  if (k == 0) throw InvalidArgument("iroot with k = 0");
  if (n < 0) throw InvalidArgument("iroot of a negative integer");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  // Binary search on [0, 2^(bits/k + 1)].
  const auto bits = mp::msb(n) + 1;
  Integer lo = 0;
  Integer hi = Integer(1) << static_cast<unsigned>(bits / k + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) >> 1;
    if (mp::pow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  return r * r == n;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InvalidArgument("division by zero");
  Integer q, r;
  mp::divide_qr(a, b, q, r);
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  if (b == 0) throw InvalidArgument("modulus zero");
  Integer m = abs(b);
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer ipow(const Integer& base, unsigned long long e) {
  Integer result = 1;
  Integer b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

Integer gcd(const Integer& a, const Integer& b) { return mp::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer mod_pow(const Integer& base, const Integer& e, const Integer& m) {
  if (e < 0) throw InvalidArgument("negative exponent in mod_pow");
  if (m == 1) return 0;
  return mp::powm(mod_floor(base, m), e, m);
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = mod_floor(a, m), r = abs(m);
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InvalidArgument("element is not invertible modulo " + to_string(m));
  return mod_floor(old_s, m);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::mt19937_64 gen(0x9E3779B97F4A7C15ULL);
  return mp::miller_rabin_test(n, 25, gen);
}

namespace {

Integer pollard_brent(const Integer& n, std::uint64_t seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1, std::numeric_limits<std::uint64_t>::max());
  for (;;) {
    Integer y = mod_floor(Integer(dist(gen)), n);
    Integer c = mod_floor(Integer(dist(gen)), n);
    if (c == 0) c = 1;
    const unsigned m = 64;
    Integer g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned i = 0; i < std::min<unsigned>(m, static_cast<unsigned>(r) - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes, std::uint64_t& seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n, seed++);
  factor_into(d, primes, seed);
  factor_into(n / d, primes, seed);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n_in) {
  Integer n = abs(n_in);
  if (n == 0) throw InvalidArgument("cannot factor zero");
  std::vector<Integer> primes;
  for (unsigned p = 2; p < 10000 && Integer(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) {
    std::uint64_t seed = 1;
    factor_into(n, primes, seed);
  }
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1U);
    }
  }
  return out;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

Integer floor(const Rational& q) {
  return floor_div(mp::numerator(q), mp::denominator(q));
}

Integer ceil(const Rational& q) {
  return -floor_div(-mp::numerator(q), mp::denominator(q));
}

Rational rational_pow(const Rational& q, unsigned long long e) {
  return Rational(ipow(mp::numerator(q), e), ipow(mp::denominator(q), e));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  Integer v{std::string(digits)};
  return (!s.empty() && s.front() == '-') ? Integer(-v) : v;
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return ratio(num, den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

bool fits_int64(const Integer& n) {
  return n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace gon
