#pragma once

#include "fgab/int_matrix.hpp"
#include "fgab/integer.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fgab {

// Canonical form of a finitely generated abelian group:
//   Z/d1 + ... + Z/dt + Z^r,   2 <= d1 | d2 | ... | dt.
// Generators are ordered torsion first, then free. Two FgGroups are
// isomorphic exactly when they compare equal.
class FgGroup {
 public:
  FgGroup() = default;
  FgGroup(std::size_t free_rank, IntVector invariant_factors);

  static FgGroup trivial() { return {}; }
  static FgGroup free(std::size_t rank) { return FgGroup(rank, {}); }
  // Z/n for n >= 1; cyclic(0) is Z.
  static FgGroup cyclic(const Integer& n);

  std::size_t free_rank() const { return free_rank_; }
  const IntVector& invariant_factors() const { return factors_; }
  std::size_t torsion_rank() const { return factors_.size(); }
  std::size_t generator_count() const { return factors_.size() + free_rank_; }

  // Order of generator i; 0 marks a free generator.
  Integer generator_order(std::size_t i) const;
  bool is_free_generator(std::size_t i) const { return i >= factors_.size(); }

  bool is_trivial() const { return generator_count() == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  // |A|; throws PreconditionError for infinite groups.
  Integer order() const;
  // Smallest e > 0 with eA = 0, or 0 when A is infinite.
  Integer exponent() const;

  // Columns d_i * e_i: the relation lattice in generator coordinates.
  IntMatrix relations() const;

  // Canonical text: "Z/2 + Z/12 + Z^2", "Z", "0".
  std::string to_string() const;

  friend bool operator==(const FgGroup&, const FgGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  IntVector factors_;
};

std::ostream& operator<<(std::ostream& os, const FgGroup& g);

// Element in normal form: torsion coordinates reduced into [0, d_i).
class GroupElement {
 public:
  GroupElement(FgGroup parent, IntVector coords);

  static GroupElement zero(const FgGroup& parent);
  static GroupElement generator(const FgGroup& parent, std::size_t i);

  const FgGroup& parent() const { return parent_; }
  const IntVector& coords() const { return coords_; }

  bool is_zero() const;
  // Order of the element, 0 if it has infinite order.
  Integer order() const;

  GroupElement operator-() const;
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
  friend GroupElement operator*(const Integer& k, const GroupElement& a);

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.parent_ == b.parent_ && a.coords_ == b.coords_;
  }
  // Lexicographic on coordinates; only meaningful within one parent.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    return a.coords_ < b.coords_;
  }

  std::string to_string() const;

 private:
  FgGroup parent_;
  IntVector coords_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& x);

// Reduces coordinates of an element of `g` into normal form.
IntVector normalize_coords(const FgGroup& g, IntVector coords);

// Homomorphism between canonical groups. The matrix is
// (codomain generators) x (domain generators) and acts on column vectors.
class Homomorphism {
 public:
  // Throws PreconditionError unless d * (column j) = 0 in the codomain for
  // every torsion generator j of order d.
  Homomorphism(FgGroup domain, FgGroup codomain, IntMatrix matrix);

  static Homomorphism identity(const FgGroup& a);
  static Homomorphism zero(const FgGroup& domain, const FgGroup& codomain);
  static Homomorphism scalar(const FgGroup& a, const Integer& k);
  // Generator images given as elements of the codomain.
  static Homomorphism from_images(const FgGroup& domain,
                                  const FgGroup& codomain,
                                  const std::vector<GroupElement>& images);

  const FgGroup& domain() const { return domain_; }
  const FgGroup& codomain() const { return codomain_; }
  const IntMatrix& matrix() const { return matrix_; }

  GroupElement operator()(const GroupElement& x) const;
  GroupElement apply(std::span<const Integer> coords) const;
  GroupElement image_of_generator(std::size_t j) const;

  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.matrix_ == b.matrix_;
  }
  friend Homomorphism operator+(const Homomorphism& f, const Homomorphism& g);
  friend Homomorphism operator-(const Homomorphism& f, const Homomorphism& g);
  friend Homomorphism operator-(const Homomorphism& f);
  friend Homomorphism operator*(const Integer& k, const Homomorphism& f);

 private:
  FgGroup domain_;
  FgGroup codomain_;
  IntMatrix matrix_;
};

// g * f is the composite g after f.
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
inline Homomorphism operator*(const Homomorphism& g, const Homomorphism& f) {
  return compose(g, f);
}

std::ostream& operator<<(std::ostream& os, const Homomorphism& f);

// Z^generators / (column span of relations).
struct Presentation {
  std::size_t generators = 0;
  IntMatrix relations;  // generators x (number of relators)
};

// Canonical form of a presentation together with mutually inverse maps
// between Z^m / relations and the canonical generators.
struct Classification {
  FgGroup group;
  IntMatrix to_canonical;    // group.generator_count() x m
  IntMatrix from_canonical;  // m x group.generator_count()

  GroupElement image(std::span<const Integer> presentation_coords) const;
  IntVector lift(const GroupElement& x) const;
};

Classification classify(const Presentation& p);

// Checks both composites: to*from is the identity on the canonical group,
// and from*to fixes Z^m modulo the relation lattice.
bool verify_classification(const Presentation& p, const Classification& c);

// Presentation with diagonal relations; order 0 gives a free summand.
Classification classify_cyclic_sum(std::span<const Integer> orders);

struct Subgroup {
  FgGroup group;
  Homomorphism inclusion;  // group -> ambient, injective
};

struct Quotient {
  FgGroup group;
  Homomorphism projection;  // ambient -> group, surjective
  IntMatrix section;        // ambient coordinates lifting each generator
};

// Subgroup generated by the columns of `generators` (ambient coordinates).
Subgroup subgroup_generated(const FgGroup& ambient, const IntMatrix& generators);
Quotient quotient(const FgGroup& ambient, const IntMatrix& generators);

Subgroup kernel(const Homomorphism& f);
Subgroup image(const Homomorphism& f);
Quotient cokernel(const Homomorphism& f);

bool is_injective(const Homomorphism& f);
bool is_surjective(const Homomorphism& f);
bool is_isomorphism(const Homomorphism& f);
Homomorphism inverse(const Homomorphism& iso);

// Some x with f(x) = y; the choice is deterministic.
std::optional<GroupElement> preimage(const Homomorphism& f, const GroupElement& y);

// Membership of `y` in the subgroup generated by the columns of `generators`.
bool in_span(const FgGroup& ambient, const IntMatrix& generators,
             const GroupElement& y);
bool same_subgroup(const FgGroup& ambient, const IntMatrix& a, const IntMatrix& b);

// h with inclusion * h = g; requires image(g) inside image(inclusion).
Homomorphism lift_through_injection(const Homomorphism& inclusion,
                                    const Homomorphism& g);
// h with h * projection = g; requires ker(projection) inside ker(g).
Homomorphism descend_through_surjection(const Homomorphism& projection,
                                        const Homomorphism& g);

struct DirectSum {
  FgGroup group;
  std::vector<Homomorphism> injections;
  std::vector<Homomorphism> projections;

  // The map sum -> target restricting to maps[k] on summand k.
  Homomorphism copair(const std::vector<Homomorphism>& maps) const;
  // The map source -> sum with components maps[k].
  Homomorphism pair(const std::vector<Homomorphism>& maps) const;
};

DirectSum direct_sum(std::span<const FgGroup> summands);
DirectSum direct_sum(const FgGroup& a, const FgGroup& b);

// A[n] = {a : na = 0} with its inclusion.
Subgroup subgroup_ann(const FgGroup& a, const Integer& n);
// A/nA with its projection.
Quotient quotient_by_n(const FgGroup& a, const Integer& n);
Subgroup torsion_part(const FgGroup& a);

// All elements of a finite group in lexicographic coordinate order.
// Throws PreconditionError for infinite groups or groups above `limit`.
std::vector<GroupElement> elements(const FgGroup& a,
                                   std::size_t limit = std::size_t{1} << 20);

}  // namespace fgab
