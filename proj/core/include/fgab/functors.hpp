#pragma once

#include "fgab/group.hpp"

#include <vector>

namespace fgab {

// 0 -> F' -incl-> F -proj-> A -> 0 with F = Z^(t+r), F' = Z^t, incl the
// diagonal d_1..d_t padded with zero rows, and proj the identity matrix.
struct FreeResolution {
  FgGroup group;
  FgGroup f;
  FgGroup f_prime;
  Homomorphism incl;
  Homomorphism proj;
};

FreeResolution free_resolution(const FgGroup& a);

// Chain map F'_A -> F'_A' lifting f : A -> A' over the diagonal resolutions.
// The lift to F -> F' is the matrix of f itself.
Homomorphism resolution_lift(const Homomorphism& f);

// Cyclic pieces of a bilinear construction are indexed lexicographically by
// (generator of the first group, generator of the second group).
inline std::size_t pair_index(std::size_t j, std::size_t i, std::size_t second_count) {
  return j * second_count + i;
}

// ------------------------------------------------------------------ tensor

struct TensorProduct {
  FgGroup a, b;
  Classification cls;  // raw pieces Z/gcd(a_j, b_i) -> canonical

  const FgGroup& group() const { return cls.group; }
  // The pure tensor x (x) y in canonical coordinates.
  GroupElement pure(const GroupElement& x, const GroupElement& y) const;
};

TensorProduct tensor_product(const FgGroup& a, const FgGroup& b);
inline FgGroup tensor_group(const FgGroup& a, const FgGroup& b) {
  return tensor_product(a, b).group();
}
// f (x) g : A (x) B -> A' (x) B'.
Homomorphism tensor_map(const Homomorphism& f, const Homomorphism& g);

// --------------------------------------------------------------------- hom

struct HomGroup {
  FgGroup a, b;
  Classification cls;      // raw pieces -> canonical
  IntVector multipliers;   // raw generator (j,i) sends e_j to multiplier * e_i

  const FgGroup& group() const { return cls.group; }
  GroupElement coordinates_of(const Homomorphism& phi) const;
  Homomorphism realize(const GroupElement& x) const;
  // One homomorphism per canonical generator.
  std::vector<Homomorphism> basis() const;
};

HomGroup hom_group(const FgGroup& a, const FgGroup& b);
// For f : A -> A' and g : B -> B', the map Hom(A', B) -> Hom(A, B'),
// phi |-> g phi f.
Homomorphism induced_hom(const Homomorphism& f, const Homomorphism& g);

// --------------------------------------------------------------------- tor

// Tor(A, B) = ker(incl_A (x) 1_B : F'_A (x) B -> F_A (x) B).
struct TorGroup {
  FgGroup a, b;
  FreeResolution resolution;  // of A
  Subgroup kernel;            // inside F'_A (x) B, canonical coordinates

  const FgGroup& group() const { return kernel.group; }
};

TorGroup tor(const FgGroup& a, const FgGroup& b);
inline FgGroup tor_group(const FgGroup& a, const FgGroup& b) { return tor(a, b).group(); }
// Tor(f, g) : Tor(A, B) -> Tor(A', B') for f : A -> A', g : B -> B'.
Homomorphism induced_tor(const Homomorphism& f, const Homomorphism& g);

// e_n(a, b) with n a = 0 and n b = 0.
struct TorSymbol {
  Integer n;
  GroupElement a;
  GroupElement b;
};

// Direct image of the symbol: sum_j (n a_j / d_j) f'_j (x) b in F'_A (x) B.
GroupElement tor_symbol_embed(const TorSymbol& s);
// Bilinear expansion over cyclic pairs, each rescaled to
// e_t(e_j, e_i) with t = lcm(d_j, d'_i), then summed in Tor coordinates.
GroupElement tor_symbol_resolve(const TorSymbol& s);

// --------------------------------------------------------------------- ext

// Ext(A, B) = cok(incl_A^* : Hom(F_A, B) -> Hom(F'_A, B)).
struct ExtGroup {
  FgGroup a, b;
  FreeResolution resolution;  // of A
  HomGroup cochains;          // Hom(F'_A, B)
  Quotient quotient;          // of cochains.group() by the image of incl^*

  const FgGroup& group() const { return quotient.group; }
  // Class of a cocycle alpha : F'_A -> B.
  GroupElement class_of(const Homomorphism& alpha) const;
  // A cocycle F'_A -> B representing x.
  Homomorphism representative(const GroupElement& x) const;
};

ExtGroup ext(const FgGroup& a, const FgGroup& b);
inline FgGroup ext_group(const FgGroup& a, const FgGroup& b) { return ext(a, b).group(); }
// Ext(f, g) : Ext(A', B) -> Ext(A, B') for f : A -> A', g : B -> B'.
Homomorphism induced_ext(const Homomorphism& f, const Homomorphism& g);

}  // namespace fgab
