#include "fgab/structure.hpp"

#include "fgab/error.hpp"

#include <algorithm>

namespace fgab {

namespace {
void require_prime(const Integer& p) {
  if (!is_prime(p)) throw PreconditionError(to_string(p) + " is not prime");
}
}  // namespace

PrimaryDecomposition primary_decomposition(const FgGroup& a) {
  PrimaryDecomposition out;
  for (const auto& d : a.invariant_factors())
    for (const auto& [p, e] : factorize(d)) out[p].push_back(e);
  for (auto& [p, es] : out) std::sort(es.begin(), es.end());
  return out;
}

FgGroup from_primary(const PrimaryDecomposition& parts, std::size_t free_rank) {
  IntVector orders;
  for (const auto& [p, es] : parts)
    for (auto e : es) orders.push_back(pow(p, e));
  for (std::size_t i = 0; i < free_rank; ++i) orders.push_back(0);
  return classify_cyclic_sum(orders).group;
}

IntVector crt_idempotents(const IntVector& moduli) {
  if (moduli.empty()) throw PreconditionError("crt_idempotents needs at least one modulus");
  Integer n = 1;
  for (const auto& m : moduli) {
    if (m < 1) throw PreconditionError("moduli must be positive");
    n *= m;
  }
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (gcd(moduli[i], moduli[j]) != 1)
        throw PreconditionError("moduli " + to_string(moduli[i]) + " and " +
                                to_string(moduli[j]) + " are not coprime");
  IntVector e(moduli.size());
  Integer sum = 0;
  for (std::size_t i = 0; i + 1 < moduli.size(); ++i) {
    // m = n/n_i is invertible mod n_i; e_i = m * (m^-1 mod n_i).
    Integer m = n / moduli[i];
    Integer s, t;
    xgcd(m, moduli[i], s, t);
    e[i] = mod(m * s, n);
    sum += e[i];
  }
  e.back() = 1 - sum;
  return e;
}

unsigned long fpk_rank(const FgGroup& a, const Integer& p, unsigned long k) {
  require_prime(p);
  if (k < 1) throw PreconditionError("k must be at least 1");
  Subgroup multiples = image(Homomorphism::scalar(a, pow(p, k - 1)));
  Subgroup f = kernel(p * multiples.inclusion);
  return valuation(f.group.order(), p);
}

FpkInvariants fpk_invariants(const FgGroup& a, const Integer& p, unsigned long k) {
  const unsigned long f = fpk_rank(a, p, k);
  return FpkInvariants{f, f - fpk_rank(a, p, k + 1)};
}

FgGroup p_primary_part(const FgGroup& a, const Integer& p) {
  require_prime(p);
  PrimaryDecomposition parts = primary_decomposition(a);
  PrimaryDecomposition only;
  if (auto it = parts.find(p); it != parts.end()) only.insert(*it);
  return from_primary(only);
}

}  // namespace fgab
