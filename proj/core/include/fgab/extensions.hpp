#pragma once

#include "fgab/exact.hpp"
#include "fgab/functors.hpp"

#include <optional>

namespace fgab {

// A -i-> B -p-> C; the middle group is always canonical.
using Extension = ShortExactSeq;

struct ExtClass {
  FgGroup c;
  FgGroup a;
  GroupElement element;  // in ext_group(c, a)
};

// h^* E for h : C' -> C, with middle {(b, c') : p(b) = h(c')}.
Extension pullback(const Extension& e, const Homomorphism& h);
// f_* E for f : A -> A', with middle (A' + B) / {(f(a), -i(a))}.
Extension pushout(const Extension& e, const Homomorphism& f);
// Middle U/V with U = {(b0, b1) : p0(b0) = p1(b1)}, V = {(i0(a), -i1(a))}.
Extension baer_sum(const Extension& e0, const Extension& e1);

// Pushout of the resolution sequence F' -> F -> C along a cocycle of c.
Extension class_to_extension(const ExtClass& c);
// Lift proj_C to beta : F -> B, restrict to F', read off the class.
ExtClass extension_to_class(const Extension& e);

struct EquivalenceResult {
  bool equivalent = false;
  // f : B0 -> B1 with f i0 = i1 and p1 f = p0, found by exhaustive search
  // when Hom(B0, B1) has at most `search_limit` elements.
  std::optional<Homomorphism> certificate;
};

EquivalenceResult equivalent(const Extension& e0, const Extension& e1,
                             unsigned long search_limit = 100000);

}  // namespace fgab
