#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gon/degree.hpp"
#include "gon/integer.hpp"

namespace gon {

// Dense univariate polynomial over the prime field F_p, coefficients in
// ascending degree with trailing zeros trimmed. p < 2^31 so that coefficient
// products fit in 64 bits.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint64_t p);
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  // Signed coefficients are reduced mod p.
  static FpPoly from_signed(std::uint64_t p, std::span<const std::int64_t> coeffs);
  static FpPoly constant(std::uint64_t p, std::uint64_t c);
  static FpPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t k);
  static FpPoly t(std::uint64_t p) { return monomial(p, 1, 1); }

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Degree degree() const;
  // -1 for the zero polynomial.
  long long deg() const { return static_cast<long long>(c_.size()) - 1; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  FpPoly& operator*=(const FpPoly& o);
  FpPoly operator-() const;
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.p_ == b.p_);
  }

  FpPoly scaled(std::uint64_t s) const;
  FpPoly shifted(std::size_t k) const;  // multiply by t^k
  std::uint64_t evaluate(std::uint64_t x) const;

  std::string to_string() const;

 private:
  void trim();
  void check_same_field(const FpPoly& o) const;

  std::uint64_t p_ = 0;
  std::vector<std::uint64_t> c_;
};

std::uint64_t fp_inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
// Square root mod an odd prime (Tonelli-Shanks); absent for non-residues.
std::optional<std::uint64_t> fp_sqrt(std::uint64_t a, std::uint64_t p);

// Euclidean division; b != 0.
void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);

FpPoly monic(const FpPoly& a);
FpPoly gcd(const FpPoly& a, const FpPoly& b);  // monic, or 0
FpPoly lcm(const FpPoly& a, const FpPoly& b);  // monic
FpPoly derivative(const FpPoly& a);
FpPoly pow(const FpPoly& a, unsigned long long e);
FpPoly pow_mod(const FpPoly& a, const Integer& e, const FpPoly& m);

// Monic irreducible factors with multiplicities, ascending by (degree,
// coefficients). The leading coefficient is dropped. a != 0.
std::vector<std::pair<FpPoly, unsigned>> factor_poly(const FpPoly& a);
bool is_irreducible(const FpPoly& a);

// Square root in F_p[t] for odd p; absent when a is not a square. The root
// with the smaller leading coefficient is returned.
std::optional<FpPoly> sqrt_poly(const FpPoly& a);

// Element of F_p(t): num / den with den monic and gcd(num, den) = 1.
struct RatFunc {
  FpPoly num;
  FpPoly den;

  RatFunc() = default;
  explicit RatFunc(const FpPoly& poly);
  RatFunc(const FpPoly& n, const FpPoly& d);

  Degree degree() const;  // deg num - deg den, -inf for 0
  bool is_zero() const { return num.is_zero(); }
};

}  // namespace gon
