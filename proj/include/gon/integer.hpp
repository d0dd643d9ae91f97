#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Floor of the square root; n >= 0.
Integer isqrt(const Integer& n);
// Floor of the k-th root; n >= 0, k >= 1.
Integer iroot(const Integer& n, unsigned k);
bool is_square(const Integer& n);

// Division rounding toward -infinity. b != 0.
Integer floor_div(const Integer& a, const Integer& b);
// Remainder in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);

Integer ipow(const Integer& base, unsigned long long e);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer mod_pow(const Integer& base, const Integer& e, const Integer& m);
// Inverse of a modulo m, or throws InvalidArgument when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

bool is_prime(const Integer& n);
// Prime factorization of |n| >= 1 in ascending prime order.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// num / den for any den != 0 (the two-argument Rational constructor rejects
// negative denominators).
Rational ratio(const Integer& num, const Integer& den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational rational_pow(const Rational& q, unsigned long long e);

// "p/q" or "p". Accepts surrounding whitespace and a leading sign.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

// True when n fits in an int64_t.
bool fits_int64(const Integer& n);

}  // namespace gon
