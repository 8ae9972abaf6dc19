#pragma once

// Brute-force oracles for finite abelian groups. They work on machine
// integers and explicit element lists and never call the normal-form code
// under test; the only library facts used are the shapes of FgGroup and the
// matrices of Homomorphism.

#include "fgab/group.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <vector>

namespace oracle {

using Mods = std::vector<long>;  // Z/m0 + Z/m1 + ...
using Elem = std::vector<long>;

inline long order(const Mods& m) {
  long n = 1;
  for (long d : m) n *= d;
  return n;
}

inline long exponent(const Mods& m) {
  long e = 1;
  for (long d : m) e = std::lcm(e, d);
  return e;
}

inline long reduce(long x, long m) { return ((x % m) + m) % m; }

inline std::vector<Elem> elements(const Mods& m) {
  std::vector<Elem> out;
  Elem x(m.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    for (; i < m.size(); ++i) {
      if (++x[i] < m[i]) break;
      x[i] = 0;
    }
    if (i == m.size()) return out;
  }
}

inline Elem scale(const Mods& m, long k, const Elem& x) {
  Elem y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = reduce(k * x[i], m[i]);
  return y;
}

inline Elem add(const Mods& m, const Elem& x, const Elem& y) {
  Elem z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = reduce(x[i] + y[i], m[i]);
  return z;
}

inline bool is_zero(const Elem& x) {
  return std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
}

// |G[k]| by enumeration.
inline long killed_count(const Mods& m, long k) {
  long n = 0;
  for (const Elem& x : elements(m)) n += is_zero(scale(m, k, x));
  return n;
}

// |G/kG| by enumerating kG.
inline long cokernel_count(const Mods& m, long k) {
  std::set<Elem> multiples;
  for (const Elem& x : elements(m)) multiples.insert(scale(m, k, x));
  return order(m) / static_cast<long>(multiples.size());
}

inline std::map<long, int> factor(long n) {
  std::map<long, int> out;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

// Exact base-p logarithm; asserts that n is a power of p.
inline int log_exact(long n, long p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  assert(n == 1);
  return e;
}

// Invariant-factor chain (ascending, entries >= 2) from per-prime exponent lists.
inline std::vector<long> chain_from_exponents(const std::map<long, std::vector<int>>& parts) {
  std::vector<std::vector<long>> columns;  // per prime, descending prime powers
  std::size_t len = 0;
  for (const auto& [p, es] : parts) {
    std::vector<int> sorted = es;
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<long> powers;
    for (int e : sorted) {
      long q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      if (q > 1) powers.push_back(q);
    }
    len = std::max(len, powers.size());
    columns.push_back(powers);
  }
  std::vector<long> chain(len, 1);
  for (const auto& col : columns)
    for (std::size_t i = 0; i < col.size(); ++i) chain[i] *= col[i];
  std::reverse(chain.begin(), chain.end());
  return chain;
}

inline std::vector<long> chain_from_prime_powers(const std::vector<long>& qs) {
  std::map<long, std::vector<int>> parts;
  for (long q : qs) {
    if (q == 1) continue;
    const auto f = factor(q);
    assert(f.size() == 1);
    parts[f.begin()->first].push_back(f.begin()->second);
  }
  return chain_from_exponents(parts);
}

inline void partitions(int n, int max_part, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

// Every multiset of prime powers with product n, i.e. every abelian group of order n.
inline std::vector<std::vector<long>> prime_power_multisets(long n) {
  std::vector<std::vector<long>> out{{}};
  for (const auto& [p, e] : factor(n)) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<long>> next;
    for (const auto& base : out)
      for (const auto& part : parts) {
        std::vector<long> qs = base;
        for (int k : part) {
          long q = 1;
          for (int i = 0; i < k; ++i) q *= p;
          qs.push_back(q);
        }
        next.push_back(qs);
      }
    out = std::move(next);
  }
  return out;
}

// Invariant-factor chains of all abelian groups of order 1..max_order.
inline std::vector<std::vector<long>> all_finite_chains(long max_order) {
  std::vector<std::vector<long>> out;
  for (long n = 1; n <= max_order; ++n)
    for (const auto& qs : prime_power_multisets(n)) out.push_back(chain_from_prime_powers(qs));
  return out;
}

inline fgab::FgGroup group_of(long rank, const std::vector<long>& chain) {
  return fgab::FgGroup(static_cast<std::size_t>(rank), fgab::IntVector(chain.begin(), chain.end()));
}

// A finite abelian group is determined by n -> |G[n]|: the number of cyclic
// p-factors of exponent >= e is log_p(|G[p^e]| / |G[p^(e-1)]|).
inline std::vector<long> chain_from_counts(const std::function<long(long)>& killed,
                                           long exponent_bound) {
  std::map<long, std::vector<int>> parts;
  for (const auto& [p, top] : factor(exponent_bound)) {
    std::vector<int> at_least(top + 2, 0);
    long prev = 1, q = 1;
    for (int e = 1; e <= top; ++e) {
      q *= p;
      const long c = killed(q);
      at_least[e] = log_exact(c / prev, p);
      prev = c;
    }
    for (int e = 1; e <= top; ++e)
      for (int i = 0; i < at_least[e] - at_least[e + 1]; ++i) parts[p].push_back(e);
  }
  return chain_from_exponents(parts);
}

// Canonical chain of an arbitrary cyclic sum, from |(+Z/m_i)[k]| = prod gcd(k, m_i).
inline std::vector<long> canonical_chain(const Mods& m) {
  return chain_from_counts(
      [&](long k) {
        long c = 1;
        for (long d : m) c *= std::gcd(k, d);
        return c;
      },
      std::max(1L, exponent(m)));
}

struct Shape {
  long rank = 0;
  std::vector<long> chain;
  friend bool operator==(const Shape&, const Shape&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Shape& s) {
  os << "{rank " << s.rank << ", [";
  for (std::size_t i = 0; i < s.chain.size(); ++i) os << (i ? "," : "") << s.chain[i];
  return os << "]}";
}

inline Shape shape_of(const fgab::FgGroup& g) {
  Shape s{static_cast<long>(g.free_rank()), {}};
  for (const auto& d : g.invariant_factors()) s.chain.push_back(d.get_si());
  return s;
}

inline Mods torsion_mods(const fgab::FgGroup& g) { return shape_of(g).chain; }

inline Mods repeat(const Mods& m, long times) {
  Mods out;
  for (long i = 0; i < times; ++i) out.insert(out.end(), m.begin(), m.end());
  return out;
}

inline Mods reduce_mods(const Mods& m, long k) {
  Mods out;
  for (long d : m) out.push_back(std::gcd(d, k));
  return out;
}

// |Hom(A, B)|: a generator of order a may go to any b with a.b = 0.
inline long hom_count(const Mods& a, const Mods& b) {
  long n = 1;
  for (long d : a) n *= killed_count(b, d);
  return n;
}

inline long exp_bound(const Mods& m) { return std::max(1L, exponent(m)); }

inline Mods hom_finite(const Mods& t, const Mods& s) {
  return chain_from_counts(
      [&](long k) {
        long n = 1;
        for (long d : t) {
          long c = 0;
          for (const Elem& y : elements(s))
            c += is_zero(scale(s, d, y)) && is_zero(scale(s, k, y));
          n *= c;
        }
        return n;
      },
      exp_bound(s));
}

// |(T (x) S)[k]| = |(T (x) S)/k| = |T/k (x) S/k| = |Hom(T/k, S/k)| for finite groups.
inline Mods tensor_finite(const Mods& t, const Mods& s) {
  return chain_from_counts(
      [&](long k) { return hom_count(reduce_mods(t, k), reduce_mods(s, k)); },
      exp_bound(s));
}

// Tor(Z/a, S) = S[a], so Tor(T, S)[k] = + S[gcd(a_j, k)].
inline Mods tor_finite(const Mods& t, const Mods& s) {
  return chain_from_counts(
      [&](long k) {
        long n = 1;
        for (long d : t) n *= killed_count(s, std::gcd(d, k));
        return n;
      },
      exp_bound(s));
}

// Ext(Z/a, S) = S/aS, so Ext(T, S)[k] has the size of + S/gcd(a_j, k)S.
inline Mods ext_finite(const Mods& t, const Mods& s) {
  return chain_from_counts(
      [&](long k) {
        long n = 1;
        for (long d : t) n *= cokernel_count(s, std::gcd(d, k));
        return n;
      },
      exp_bound(s));
}

inline Mods concat(std::initializer_list<Mods> parts) {
  Mods out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Mixed groups split as Z^r + T; Hom(T, Z) = 0, Ext(Z, -) = 0, Ext(T, Z) = T.
inline Shape hom(const fgab::FgGroup& a, const fgab::FgGroup& b) {
  const Shape x = shape_of(a), y = shape_of(b);
  return {x.rank * y.rank,
          canonical_chain(concat({repeat(y.chain, x.rank), hom_finite(x.chain, y.chain)}))};
}

inline Shape tensor(const fgab::FgGroup& a, const fgab::FgGroup& b) {
  const Shape x = shape_of(a), y = shape_of(b);
  return {x.rank * y.rank,
          canonical_chain(concat({repeat(x.chain, y.rank), repeat(y.chain, x.rank),
                                  tensor_finite(x.chain, y.chain)}))};
}

inline Shape tor(const fgab::FgGroup& a, const fgab::FgGroup& b) {
  return {0, tor_finite(shape_of(a).chain, shape_of(b).chain)};
}

inline Shape ext(const fgab::FgGroup& a, const fgab::FgGroup& b) {
  const Shape x = shape_of(a), y = shape_of(b);
  return {0, canonical_chain(concat({repeat(x.chain, y.rank), ext_finite(x.chain, y.chain)}))};
}

// ---------------------------------------------------------------------------
// Maps between canonical groups, evaluated by hand.

inline Elem normalize(const fgab::FgGroup& g, Elem x) {
  const auto& f = g.invariant_factors();
  for (std::size_t i = 0; i < f.size(); ++i) x[i] = reduce(x[i], f[i].get_si());
  return x;
}

inline Elem apply(const fgab::Homomorphism& f, const Elem& x) {
  const auto& m = f.matrix();
  Elem y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += m(i, j).get_si() * x[j];
  return normalize(f.codomain(), y);
}

// Subgroup of a finite group spanned by `gens`, as an element set.
inline std::set<Elem> span(const Mods& m, const std::vector<Elem>& gens) {
  std::set<Elem> seen{Elem(m.size(), 0)};
  std::vector<Elem> frontier{Elem(m.size(), 0)};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const Elem& x : frontier)
      for (const Elem& g : gens) {
        Elem y = add(m, x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::set<Elem> image_set(const fgab::Homomorphism& f) {
  std::vector<Elem> gens;
  for (std::size_t j = 0; j < f.domain().generator_count(); ++j) {
    Elem e(f.domain().generator_count(), 0);
    e[j] = 1;
    gens.push_back(oracle::apply(f, e));
  }
  return span(torsion_mods(f.codomain()), gens);
}

inline std::set<Elem> kernel_set(const fgab::Homomorphism& f) {
  std::set<Elem> out;
  for (const Elem& x : elements(torsion_mods(f.domain())))
    if (is_zero(oracle::apply(f, x))) out.insert(x);
  return out;
}

// Exactness of X -f-> Y -g-> Z at a finite Y (X and Z may be infinite).
inline bool exact_at(const fgab::Homomorphism& f, const fgab::Homomorphism& g) {
  return image_set(f) == kernel_set(g);
}

inline bool injective(const fgab::Homomorphism& f) { return kernel_set(f).size() == 1; }

inline bool surjective(const fgab::Homomorphism& f) {
  return static_cast<long>(image_set(f).size()) == order(torsion_mods(f.codomain()));
}

// log_p |F_p^k(A)| with F_p^k(A) = {a in p^(k-1) A : p a = 0}, by enumeration.
inline unsigned long fpk_log(const Mods& m, long p, unsigned long k) {
  long pk1 = 1;
  for (unsigned long i = 1; i < k; ++i) pk1 *= p;
  std::set<Elem> f;
  for (const auto& x : elements(m)) {
    const Elem y = scale(m, pk1, x);
    if (is_zero(scale(m, p, y))) f.insert(y);
  }
  return static_cast<unsigned long>(log_exact(static_cast<long>(f.size()), p));
}

inline std::set<Elem> apply_set(const fgab::Homomorphism& f, const std::set<Elem>& xs) {
  std::set<Elem> out;
  for (const auto& x : xs) out.insert(oracle::apply(f, x));
  return out;
}

// Eventual image E = im h^m (m large) of an endomorphism of a finite group.
// Coherent sequences of the constant tower on h all live in E, where h is a
// bijection, so lim is isomorphic to E.
inline std::set<Elem> eventual_image(const fgab::Homomorphism& h) {
  std::set<Elem> cur;
  for (const auto& x : elements(torsion_mods(h.domain()))) cur.insert(x);
  for (;;) {
    std::set<Elem> next = apply_set(h, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace oracle
