#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gon {

// Degree of a polynomial or rational function: an integer, or -infinity
// for 0.
// Addition absorbs -infinity; -infinity compares below every integer.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(std::int64_t d) : value_(d), finite_(true) {}

  static constexpr Degree neg_infinity() { return Degree(); }

  constexpr bool is_neg_infinity() const { return !finite_; }
  // Only meaningful when finite.
  constexpr std::int64_t value() const { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  // Comparison against plain integer bounds.
  friend constexpr bool operator<=(Degree a, std::int64_t b) { return !a.finite_ || a.value_ <= b; }
  friend constexpr bool operator<(Degree a, std::int64_t b) { return !a.finite_ || a.value_ < b; }

  std::string to_string() const { return finite_ ? std::to_string(value_) : std::string("-inf"); }

 private:
  std::int64_t value_ = 0;
  bool finite_ = false;
};

}  // namespace gon
