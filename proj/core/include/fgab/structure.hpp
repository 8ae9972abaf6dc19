#pragma once

#include "fgab/group.hpp"

#include <map>
#include <vector>

namespace fgab {

// p -> sorted exponents e with Z/p^e a summand of tors(A).
using PrimaryDecomposition = std::map<Integer, std::vector<unsigned long>>;

PrimaryDecomposition primary_decomposition(const FgGroup& a);

// Inverse of primary_decomposition (plus a free part).
FgGroup from_primary(const PrimaryDecomposition& parts, std::size_t free_rank = 0);

// Idempotents for pairwise coprime moduli n_1..n_r with n = prod n_i:
// e_i = 1 mod n_i, e_i = 0 mod n/n_i, sum e_i = 1 exactly. The first r-1
// are least non-negative residues mod n; the last absorbs the correction.
IntVector crt_idempotents(const IntVector& moduli);

struct FpkInvariants {
  unsigned long f = 0;  // log_p |F_p^k(A)|
  unsigned long g = 0;  // multiplicity of Z/p^k in tors(A)
};

// F_p^k(A) = {a in p^(k-1)A : pa = 0}, computed on subgroups.
unsigned long fpk_rank(const FgGroup& a, const Integer& p, unsigned long k);
FpkInvariants fpk_invariants(const FgGroup& a, const Integer& p, unsigned long k);

// The p-primary part of tors(A) as a canonical group.
FgGroup p_primary_part(const FgGroup& a, const Integer& p);

}  // namespace fgab
