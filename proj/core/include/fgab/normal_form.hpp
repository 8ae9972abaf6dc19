#pragma once

#include "fgab/int_matrix.hpp"

#include <optional>
#include <vector>

namespace fgab {

// U * M * V = D with U, V unimodular. D is diagonal with d1 | d2 | ... and
// zero diagonal entries last. u_inverse is U^-1, accumulated alongside U so
// that callers can move between presentation and canonical coordinates.
struct SnfResult {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  IntMatrix u_inverse;
  IntVector invariant_factors;  // nonzero diagonal entries, in order

  std::size_t rank() const { return invariant_factors.size(); }
};

struct HnfResult {
  IntMatrix basis;      // rank x cols, rows are the canonical basis
  IntMatrix transform;  // transform * M = [basis; 0]
  std::vector<std::size_t> pivots;
};

// Minimal-absolute-value pivoting keeps intermediate entries small.
SnfResult snf(const IntMatrix& m);

// Row-style upper echelon form: positive pivots, entries above each pivot
// reduced into [0, pivot).
HnfResult hnf(const IntMatrix& m);

// Rows form the canonical (HNF) basis of {x : m x = 0}.
IntMatrix kernel_lattice(const IntMatrix& m);

// Some x with m x = b, or nullopt when b is not in the column lattice. The
// particular solution is read off the SNF and is deterministic.
std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b);

}  // namespace fgab
