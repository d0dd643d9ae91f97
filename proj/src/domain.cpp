#include "gon/domain.hpp"

#include "gon/errors.hpp"

namespace gon {

DomainDescriptor DomainDescriptor::integers() { return DomainDescriptor{}; }

DomainDescriptor DomainDescriptor::poly_over(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(Integer(p))) {
    throw InvalidArgument("F_p[t] needs a prime p < 2^31, got " + std::to_string(p));
  }
  return DomainDescriptor{DomainKind::PolyOverFp, p, p, 1};
}

DomainDescriptor DomainDescriptor::parse(const std::string& name) {
  if (name == "Z") return integers();
  if (name.size() > 4 && name.front() == 'F' && name.ends_with("[t]")) {
    const std::string digits = name.substr(1, name.size() - 4);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 12) {
      return poly_over(std::stoull(digits));
    }
  }
  throw InvalidArgument("unknown domain '" + name + "' (expected \"Z\" or \"F<p>[t]\")");
}

std::string DomainDescriptor::name() const {
  return is_integers() ? std::string("Z") : "F" + std::to_string(p) + "[t]";
}

Rational norm_element(const DomainElement& x, const DomainDescriptor& d) {
  if (d.is_integers()) {
    const auto* v = std::get_if<Integer>(&x);
    if (v == nullptr) throw InvalidArgument("polynomial passed to a Z norm");
    return Rational(abs(*v));
  }
  const auto* f = std::get_if<FpPoly>(&x);
  if (f == nullptr || (!f->is_zero() && f->modulus() != d.p)) throw InvalidArgument("element not in " + d.name());
  if (f->is_zero()) return Rational(0);
  return Rational(ipow(Integer(d.q), static_cast<unsigned long long>(f->deg())));
}

Degree poly_degree(const DomainElement& x) {
  const auto* f = std::get_if<FpPoly>(&x);
  if (f == nullptr) throw InvalidArgument("degree requested for an integer");
  return f->degree();
}

}  // namespace gon
