#pragma once

#include "fgab/exact.hpp"
#include "fgab/functors.hpp"

namespace fgab {

// 0 -> A[n] -> B[n] -> C[n] -> A/n -> B/n -> C/n -> 0 for E = (A -> B -> C),
// with delta(q(b)) = a + nA whenever nb = j(a).
SixTermSequence six_term_mod_n(const ShortExactSeq& e, const Integer& n,
                               const LiftPolicy& policy = {});

// 0 -> Tor(U,A) -> Tor(U,B) -> Tor(U,C) -> U(x)A -> U(x)B -> U(x)C -> 0.
// The connecting map sends e_n(u, q(b)) to u (x) a whenever nb = j(a).
SixTermSequence six_term_tor(const FgGroup& u, const ShortExactSeq& e,
                             const LiftPolicy& policy = {});

// 0 -> Hom(U,A) -> Hom(U,B) -> Hom(U,C) -> Ext(U,A) -> Ext(U,B) -> Ext(U,C) -> 0.
// delta(phi) is the class of j^-1 beta incl_U, where q beta = phi proj_U.
SixTermSequence six_term_ext_cov(const FgGroup& u, const ShortExactSeq& e,
                                 const LiftPolicy& policy = {});

// 0 -> Hom(C,V) -> Hom(B,V) -> Hom(A,V) -> Ext(C,V) -> Ext(B,V) -> Ext(A,V) -> 0.
// delta(phi) is the class of phi alpha, where q beta = proj_C and
// beta incl_C = j alpha.
SixTermSequence six_term_ext_contra(const ShortExactSeq& e, const FgGroup& v,
                                    const LiftPolicy& policy = {});

}  // namespace fgab
