#pragma once

#include "fgab/group.hpp"
#include "fgab/structure.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fgab {

// Truncated p-adic integer: residue mod p^K. Binary operations need the same
// prime; mixed precisions truncate to the smaller one.
class PadicInt {
 public:
  PadicInt(Integer p, unsigned long precision, const Integer& value);

  static PadicInt from_digits(const Integer& p, const std::vector<Integer>& digits);

  const Integer& prime() const { return p_; }
  unsigned long precision() const { return k_; }
  const Integer& residue() const { return residue_; }
  Integer modulus() const { return pow(p_, k_); }

  // Same value at a lower precision.
  PadicInt truncate(unsigned long precision) const;
  // K digits in [0, p), least significant first.
  std::vector<Integer> digits() const;
  bool is_unit() const { return !divides(p_, residue_); }

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& x, const PadicInt& y);
  friend PadicInt operator-(const PadicInt& x, const PadicInt& y);
  friend PadicInt operator*(const PadicInt& x, const PadicInt& y);
  friend bool operator==(const PadicInt& x, const PadicInt& y) = default;

 private:
  struct Reduced {};
  // Skips the primality check; residue must already lie in [0, p^K).
  PadicInt(Reduced, Integer p, unsigned long precision, Integer residue)
      : p_(std::move(p)), k_(precision), residue_(std::move(residue)) {}

  Integer p_;
  unsigned long k_;
  Integer residue_;
};

// v(x), or `infinite` when the residue is 0 (v >= K is all that is known).
struct PadicValuation {
  bool infinite = false;
  unsigned long value = 0;
};

PadicValuation valuation(const PadicInt& x);

// x = p^e u with u a unit at precision K - e. Throws for a zero residue.
std::pair<unsigned long, PadicInt> unit_decompose(const PadicInt& x);

// Newton iteration y <- y (2 - x y), doubling the correct precision.
PadicInt invert_unit(const PadicInt& x);

// d(x, y) = p^-v(x - y), kept exact as the exponent v(x - y); infinite means
// x = y at the working precision.
PadicValuation distance_exponent(const PadicInt& x, const PadicInt& y);

// Prime support of a multiplicative set: a finite set, everything except a
// finite set (localization at those primes), or all primes.
struct PrimeSet {
  enum class Kind { Finite, AllExcept, All };
  Kind kind = Kind::Finite;
  std::set<Integer> primes;

  static PrimeSet finite(std::set<Integer> ps) { return {Kind::Finite, std::move(ps)}; }
  static PrimeSet all_except(std::set<Integer> ps) { return {Kind::AllExcept, std::move(ps)}; }
  static PrimeSet all() { return {Kind::All, {}}; }

  bool contains(const Integer& p) const;
  std::string to_string() const;
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

// A[S^-1]: the rank and the primary torsion at primes not inverted.
struct LocalizedGroup {
  PrimeSet inverted;
  std::size_t rank = 0;
  PrimaryDecomposition torsion;

  FgGroup torsion_group() const { return from_primary(torsion); }
  // True when the result is a finitely generated group (no free part, or
  // nothing inverted).
  bool finitely_generated() const;
  std::string to_string() const;
  friend bool operator==(const LocalizedGroup&, const LocalizedGroup&) = default;
};

LocalizedGroup localize(const FgGroup& a, const PrimeSet& s);
LocalizedGroup localize(const LocalizedGroup& a, const PrimeSet& s);

// Z_p^rank + finite p-group.
struct CompletedGroup {
  Integer p;
  std::size_t zp_rank = 0;
  FgGroup finite_part;

  bool is_zero() const { return zp_rank == 0 && finite_part.is_trivial(); }
  std::string to_string() const;
  friend bool operator==(const CompletedGroup&, const CompletedGroup&) = default;
};

CompletedGroup complete(const FgGroup& a, const Integer& p);
// G / p^k G as a canonical group.
FgGroup mod_pk(const CompletedGroup& g, unsigned long k);

struct DerivedCompletion {
  CompletedGroup l0;
  FgGroup l1;  // always 0: finitely generated groups have bounded p-torsion
};

DerivedCompletion derived_completion(const FgGroup& a, const Integer& p);

}  // namespace fgab
