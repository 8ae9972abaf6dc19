#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fgab {

using Integer = mpz_class;

// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
Integer xgcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

// Least non-negative residue; `modulus` must be positive.
Integer mod(const Integer& a, const Integer& modulus);

// Floor division, exact for negative operands.
Integer floor_div(const Integer& a, const Integer& b);

bool divides(const Integer& d, const Integer& a);

// Sign of |a| - |b|.
inline int cmpabs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

Integer pow(const Integer& base, unsigned long exponent);

// Largest e with p^e | a; a must be nonzero.
unsigned long valuation(const Integer& a, const Integer& p);

bool is_prime(const Integer& n);

// Prime factorisation of |n| (n != 0) as prime -> exponent.
std::map<Integer, unsigned long> factorize(const Integer& n);

std::string to_string(const Integer& a);

// Accepts an optional sign followed by decimal digits.
Integer parse_integer(const std::string& text);

using IntVector = std::vector<Integer>;

}  // namespace fgab
