#include "gon/modsqrt.hpp"

#include "gon/errors.hpp"

namespace gon {

std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  const Integer a = mod_floor(a_in, p);
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
  Integer q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Integer z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  unsigned m = s;
  Integer c = mod_pow(z, q, p);
  Integer t = mod_pow(a, q, p);
  Integer r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    unsigned i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Integer b = c;
    for (unsigned j = 0; j + 1 < m - i; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return std::min(r, Integer(p - r));
}

std::optional<Integer> sqrt_mod_prime_power(const Integer& a, const Integer& p, unsigned e) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw InvalidArgument("sqrt_mod_prime_power needs an odd prime");
  if (e == 0) throw InvalidArgument("sqrt_mod_prime_power needs e >= 1");
  if (mod_floor(a, p) == 0) throw InvalidArgument("sqrt_mod_prime_power needs a coprime to p");
  auto r1 = sqrt_mod_prime(a, p);
  if (!r1) return std::nullopt;
  Integer r = *r1;
  Integer mod = p;
  const Integer target = ipow(p, e);
  // Newton step r <- r - (r^2 - a) / (2r), doubling the precision.
  while (mod < target) {
    mod = mod * mod;
    if (mod > target) mod = target;
    Integer inv = mod_inverse(2 * r, mod);
    r = mod_floor(r - (r * r - a) * inv, mod);
  }
  return std::min(r, Integer(target - r));
}

}  // namespace gon
