#pragma once

// Deterministic benchmark inputs.

#include "fgab/group.hpp"

#include <random>

namespace bench {

inline fgab::IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-bound, bound);
  fgab::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

// Z^r + Z/2 + Z/12 + ... with n torsion summands forming a divisibility chain.
inline fgab::FgGroup chain_group(std::size_t rank, std::size_t n) {
  fgab::IntVector factors;
  fgab::Integer d = 2;
  for (std::size_t i = 0; i < n; ++i, d *= 6) factors.push_back(d);
  return fgab::FgGroup(rank, factors);
}

}  // namespace bench
