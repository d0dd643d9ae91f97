#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "gon/degree.hpp"
#include "gon/fp_poly.hpp"
#include "gon/integer.hpp"

namespace gon {

enum class DomainKind { Integers, PolyOverFp };

struct DomainDescriptor {
  DomainKind kind = DomainKind::Integers;
  std::uint64_t p = 0;  // PolyOverFp only
  std::uint64_t q = 0;  // norm base, = p
  int artin_constant = 2;

  static DomainDescriptor integers();
  // Throws InvalidArgument unless p is a prime below 2^31.
  static DomainDescriptor poly_over(std::uint64_t p);
  // "Z" or "F<p>[t]".
  static DomainDescriptor parse(const std::string& name);
  std::string name() const;

  bool is_integers() const { return kind == DomainKind::Integers; }
  friend bool operator==(const DomainDescriptor&, const DomainDescriptor&) = default;
};

using DomainElement = std::variant<Integer, FpPoly>;

// |x| over Z, q^deg x over F_p[t]; 0 for x = 0.
Rational norm_element(const DomainElement& x, const DomainDescriptor& d);
Degree poly_degree(const DomainElement& x);

}  // namespace gon
