#pragma once

#include <optional>

#include "gon/integer.hpp"

namespace gon {

// r with r^2 = a (mod p^e) and 0 <= r < p^e, the smaller of the two roots;
// absent when a is a non-residue. Requires p odd prime, p not dividing a.
std::optional<Integer> sqrt_mod_prime_power(const Integer& a, const Integer& p, unsigned e);

// Tonelli-Shanks over F_p, smaller root; absent for non-residues.
std::optional<Integer> sqrt_mod_prime(const Integer& a, const Integer& p);

}  // namespace gon
