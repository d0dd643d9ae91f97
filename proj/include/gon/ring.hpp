#pragma once

#include <cstdint>
#include <string>

#include "gon/domain.hpp"
#include "gon/fp_poly.hpp"
#include "gon/integer.hpp"

namespace gon {

// Euclidean-ring traits used by the generic lattice and form algorithms.
// Elements support +, -, *, unary - and == directly; everything that needs
// the ring context (zero of the right field, Euclidean size, unit
// normalization) goes through the traits object.

struct IntegerRing {
  using Elem = Integer;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const { return v; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
  // Euclidean size comparison.
  bool smaller(const Elem& a, const Elem& b) const { return abs(a) < abs(b); }
  // Floor division: for b > 0 the remainder lies in [0, b).
  void divmod(const Elem& a, const Elem& b, Elem& q, Elem& r) const {
    q = floor_div(a, b);
    r = a - q * b;
  }
  // Unit u such that u * a is the canonical associate (positive).
  Elem normalizer(const Elem& a) const { return a < 0 ? Elem(-1) : Elem(1); }
  Elem normalize(const Elem& a) const { return abs(a); }
  Elem unit_inverse(const Elem& u) const { return u; }
  Elem gcd(const Elem& a, const Elem& b) const { return gon::gcd(a, b); }
  Integer norm(const Elem& a) const { return abs(a); }
  DomainDescriptor descriptor() const { return DomainDescriptor::integers(); }
  std::string to_string(const Elem& a) const { return gon::to_string(a); }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }
};

struct PolyRing {
  using Elem = FpPoly;

  explicit PolyRing(std::uint64_t prime) : p(prime) {}

  std::uint64_t p;

  Elem zero() const { return FpPoly(p); }
  Elem one() const { return FpPoly::constant(p, 1); }
  Elem t() const { return FpPoly::t(p); }
  Elem from_int(std::int64_t v) const {
    const auto sp = static_cast<std::int64_t>(p);
    return FpPoly::constant(p, static_cast<std::uint64_t>((v % sp + sp) % sp));
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool is_unit(const Elem& a) const { return a.deg() == 0; }
  bool smaller(const Elem& a, const Elem& b) const { return a.deg() < b.deg(); }
  void divmod(const Elem& a, const Elem& b, Elem& q, Elem& r) const { gon::divmod(a, b, q, r); }
  Elem normalizer(const Elem& a) const {
    return a.is_zero() ? one() : FpPoly::constant(p, fp_inverse(a.lead(), p));
  }
  Elem normalize(const Elem& a) const { return monic(a); }
  Elem unit_inverse(const Elem& u) const { return FpPoly::constant(p, fp_inverse(u.lead(), p)); }
  Elem gcd(const Elem& a, const Elem& b) const { return gon::gcd(a, b); }
  Integer norm(const Elem& a) const {
    return a.is_zero() ? Integer(0) : ipow(Integer(p), static_cast<unsigned long long>(a.deg()));
  }
  DomainDescriptor descriptor() const { return DomainDescriptor::poly_over(p); }
  std::string to_string(const Elem& a) const { return a.to_string(); }
  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.p == b.p; }
};

}  // namespace gon
