#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace graphjac {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical (reduced, positive denominator)
using IntVector = std::vector<Integer>;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Floor division, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);
/// Non-negative remainder in [0, |m|).
Integer mod(const Integer& a, const Integer& m);
Integer floor(const Rational& r);
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // gcd(a, b) >= 0
  Integer s;  // s*a + t*b == g
  Integer t;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Inverse of a modulo m, m >= 1 and gcd(a, m) == 1. Result in [0, m).
Integer inverse_mod(const Integer& a, const Integer& m);

/// Distinct prime divisors of |n| by trial division; n must be nonzero.
std::vector<Integer> prime_divisors(Integer n);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);  // "p/q", always with the slash

}  // namespace graphjac
