#include "fgab/normal_form.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace fgab;

namespace {

IntVector vec(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

void expect_snf_contract(const IntMatrix& m) {
  const SnfResult r = snf(m);
  EXPECT_EQ(r.u * m * r.v, r.d);
  EXPECT_TRUE(is_unimodular(r.u));
  EXPECT_TRUE(is_unimodular(r.v));
  EXPECT_EQ(r.u * r.u_inverse, IntMatrix::identity(m.rows()));
  for (std::size_t i = 0; i < r.d.rows(); ++i)
    for (std::size_t j = 0; j < r.d.cols(); ++j)
      if (i != j) EXPECT_EQ(r.d(i, j), 0);
  const std::size_t t = r.rank();
  for (std::size_t i = 0; i < t; ++i) {
    EXPECT_EQ(r.d(i, i), r.invariant_factors[i]);
    EXPECT_GT(r.invariant_factors[i], 0);
    if (i + 1 < t) EXPECT_TRUE(divides(r.invariant_factors[i], r.invariant_factors[i + 1]));
  }
  for (std::size_t i = t; i < std::min(m.rows(), m.cols()); ++i) EXPECT_EQ(r.d(i, i), 0);
}

void expect_hnf_shape(const HnfResult& h, const IntMatrix& m) {
  const std::size_t r = h.basis.rows();
  ASSERT_EQ(h.pivots.size(), r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t p = h.pivots[i];
    if (i > 0) EXPECT_GT(p, h.pivots[i - 1]);
    for (std::size_t c = 0; c < p; ++c) EXPECT_EQ(h.basis(i, c), 0);
    EXPECT_GT(h.basis(i, p), 0);
    for (std::size_t k = 0; k < i; ++k) {
      EXPECT_GE(h.basis(k, p), 0);
      EXPECT_LT(h.basis(k, p), h.basis(i, p));
    }
  }
  EXPECT_TRUE(is_unimodular(h.transform));
  const IntMatrix tm = h.transform * m;
  EXPECT_EQ(tm.block(0, 0, r, m.cols()), h.basis);
  EXPECT_TRUE(tm.block(r, 0, m.rows() - r, m.cols()).is_zero());
}

}  // namespace

TEST(Snf, SmallExample) {
  const SnfResult r = snf(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(r.invariant_factors, vec({2, 4}));
  EXPECT_EQ(r.d, (IntMatrix{{2, 0}, {0, 4}}));
}

TEST(Snf, ZeroMatrix) {
  const SnfResult r = snf(IntMatrix{{0}});
  EXPECT_EQ(r.d, IntMatrix{{0}});
  EXPECT_TRUE(r.invariant_factors.empty());
}

TEST(Snf, Identity) {
  const SnfResult r = snf(IntMatrix::identity(3));
  EXPECT_EQ(r.d, IntMatrix::identity(3));
  EXPECT_EQ(r.invariant_factors, vec({1, 1, 1}));
}

TEST(Snf, EmptyShapes) {
  for (auto [rows, cols] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {2, 0}}) {
    const SnfResult r = snf(IntMatrix(rows, cols));
    EXPECT_EQ(r.u.rows(), rows);
    EXPECT_EQ(r.v.rows(), cols);
    EXPECT_TRUE(r.invariant_factors.empty());
  }
}

TEST(Snf, InvariantFactorsAreMinorGcds) {
  // d1 = gcd of entries, d1 d2 = gcd of 2x2 minors.
  const IntMatrix m{{4, 6, 10}, {8, 18, 4}};
  const SnfResult r = snf(m);
  ASSERT_EQ(r.rank(), 2u);
  EXPECT_EQ(r.invariant_factors[0], 2);
  const Integer minors = gcd(gcd(Integer(4 * 18 - 6 * 8), Integer(4 * 4 - 10 * 8)),
                             Integer(6 * 4 - 10 * 18));
  EXPECT_EQ(Integer(r.invariant_factors[0] * r.invariant_factors[1]), Integer(abs(minors)));
}

TEST(Snf, RandomContract) {
  gen::Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    expect_snf_contract(gen::matrix(rng, rows, cols, 9));
  }
}

TEST(Snf, LargeEntriesStayExact) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  m(0, 1) = Integer("555555555555555555555555555555");
  expect_snf_contract(m);
}

TEST(Hnf, Examples) {
  EXPECT_EQ(hnf(IntMatrix{{2, 0}, {1, 2}}).basis, (IntMatrix{{1, 2}, {0, 4}}));
  EXPECT_EQ(hnf(IntMatrix::identity(2)).basis, IntMatrix::identity(2));
  EXPECT_EQ(hnf(IntMatrix{{3}}).basis, IntMatrix{{3}});
}

TEST(Hnf, DropsDependentRows) {
  const HnfResult h = hnf(IntMatrix{{1, 2}, {2, 4}, {3, 6}});
  EXPECT_EQ(h.basis, (IntMatrix{{1, 2}}));
  expect_hnf_shape(h, IntMatrix{{1, 2}, {2, 4}, {3, 6}});
}

TEST(Hnf, RandomShapeIdempotenceAndLatticeInvariance) {
  gen::Rng rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const IntMatrix m = gen::matrix(rng, rows, cols, 8);
    const HnfResult h = hnf(m);
    expect_hnf_shape(h, m);
    EXPECT_EQ(hnf(h.basis).basis, h.basis);
    EXPECT_EQ(hnf(gen::unimodular(rng, rows) * m).basis, h.basis);
  }
}

TEST(KernelLattice, Examples) {
  EXPECT_EQ(kernel_lattice(IntMatrix{{1, 2}, {2, 4}}), (IntMatrix{{2, -1}}));
  EXPECT_EQ(kernel_lattice(IntMatrix::identity(3)).rows(), 0u);
  EXPECT_EQ(kernel_lattice(IntMatrix(1, 2)), IntMatrix::identity(2));
}

TEST(KernelLattice, RandomBasisProperties) {
  gen::Rng rng(303);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const IntMatrix m = gen::matrix(rng, rows, cols, 4);
    const IntMatrix k = kernel_lattice(m);
    ASSERT_EQ(k.cols(), cols);
    EXPECT_TRUE((m * k.transpose()).is_zero());
    EXPECT_EQ(hnf(k).basis, k);
    // Short kernel vectors lie in the row span.
    const IntMatrix kt = k.transpose();
    for (int s = 0; s < 40; ++s) {
      const IntVector y = gen::coords(rng, cols, 3);
      const IntVector my = m * y;
      if (std::any_of(my.begin(), my.end(), [](const Integer& v) { return v != 0; })) continue;
      EXPECT_TRUE(solve(kt, y).has_value());
    }
  }
}

TEST(Solve, Examples) {
  EXPECT_EQ(solve(IntMatrix{{2}}, vec({4})), vec({2}));
  EXPECT_FALSE(solve(IntMatrix{{2}}, vec({3})).has_value());
  EXPECT_EQ(solve(IntMatrix{{2, 4}, {6, 8}}, vec({2, 6})), vec({1, 0}));
}

TEST(Solve, AgreesWithBruteForceEnumeration) {
  gen::Rng rng(404);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const IntMatrix m = gen::matrix(rng, rows, cols, 4);
    const IntVector b = gen::coords(rng, rows, 6);
    // Enumerate x in [-6, 6]^cols.
    bool found = false;
    IntVector x(cols, Integer(-6));
    while (!found) {
      found = m * x == b;
      std::size_t i = 0;
      for (; i < cols; ++i) {
        if (++x[i] <= 6) break;
        x[i] = -6;
      }
      if (i == cols) break;
    }
    const auto s = solve(m, b);
    if (s) EXPECT_EQ(m * *s, b);
    if (found) EXPECT_TRUE(s.has_value());
    // b in the lattice by construction must be solvable.
    const IntVector inside = m * gen::coords(rng, cols, 4);
    const auto t = solve(m, inside);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(m * *t, inside);
  }
}

TEST(Solve, IsDeterministic) {
  const IntMatrix m{{1, 1, 0}, {0, 1, 1}};
  EXPECT_EQ(solve(m, vec({3, 5})), solve(m, vec({3, 5})));
}
