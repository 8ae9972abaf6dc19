#include "fgab/error.hpp"
#include "fgab/exact.hpp"
#include "oracle.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace fgab;

namespace {

const FgGroup Z = FgGroup::free(1);

GroupElement el(const FgGroup& g, std::initializer_list<long> xs) {
  return GroupElement(g, IntVector(xs.begin(), xs.end()));
}

Homomorphism scalar(const FgGroup& g, long k) { return Homomorphism::scalar(g, k); }

Homomorphism map1(const FgGroup& a, const FgGroup& b, std::initializer_list<long> images) {
  std::vector<GroupElement> ims;
  for (long x : images) ims.push_back(el(b, {x}));
  return Homomorphism::from_images(a, b, ims);
}

// Z -2-> Z -> Z/2
ShortExactSeq doubling() {
  return ShortExactSeq(scalar(Z, 2), map1(Z, FgGroup::cyclic(2), {1}));
}

void expect_exact_by_enumeration(const SixTermSequence& s) {
  const auto& m = s.maps();
  ASSERT_EQ(m.size(), 5u);
  if (s.groups()[0].is_finite()) EXPECT_TRUE(oracle::injective(m[0]));
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (s.groups()[i + 1].is_finite()) EXPECT_TRUE(oracle::exact_at(m[i], m[i + 1])) << "node " << i + 1;
  if (s.groups()[5].is_finite()) EXPECT_TRUE(oracle::surjective(m[4]));
}

}  // namespace

TEST(IsExactAt, Examples) {
  EXPECT_TRUE(is_exact_at(scalar(Z, 2), map1(Z, FgGroup::cyclic(2), {1})));
  EXPECT_TRUE(is_exact_at(Homomorphism::zero(Z, Z), Homomorphism::identity(Z)));
  const FgGroup z4 = FgGroup::cyclic(4);
  const ExactnessCheck c = is_exact_at(scalar(z4, 2), scalar(z4, 4));
  EXPECT_FALSE(c);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(mod(c.witness->coords()[0], 2), 1);
  EXPECT_FALSE(c.reason.empty());
}

TEST(IsExactAt, WitnessForNonzeroComposite) {
  const ExactnessCheck c = is_exact_at(Homomorphism::identity(Z), Homomorphism::identity(Z));
  EXPECT_FALSE(c);
  ASSERT_TRUE(c.witness.has_value());
}

TEST(IsExactAt, ShapeMismatchIsRejected) {
  EXPECT_THROW(is_exact_at(scalar(Z, 2), scalar(FgGroup::cyclic(2), 1)), PreconditionError);
}

TEST(ShortExactSeq, RejectsEachBrokenCondition) {
  const FgGroup z2 = FgGroup::cyclic(2), z4 = FgGroup::cyclic(4);
  // First map not injective.
  EXPECT_THROW(ShortExactSeq(map1(z4, z4, {2}), map1(z4, z2, {1})), PreconditionError);
  // Second map not surjective.
  EXPECT_THROW(ShortExactSeq(scalar(Z, 2), Homomorphism::zero(Z, z2)), PreconditionError);
  // Image differs from kernel.
  EXPECT_THROW(ShortExactSeq(scalar(Z, 4), map1(Z, z2, {1})), PreconditionError);
  EXPECT_NO_THROW(doubling());
}

TEST(ShortExactSeq, OrdersAndRanksMultiply) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const ShortExactSeq e = gen::ses(rng, 2, 16);
    EXPECT_EQ(e.b().free_rank(), e.a().free_rank() + e.c().free_rank());
    if (e.b().is_finite()) EXPECT_EQ(e.b().order(), e.a().order() * e.c().order());
  }
}

TEST(SplitSequence, SatisfiesSplitIdentities) {
  const FgGroup a(1, {2}), c(0, {6});
  const ShortExactSeq e = split_sequence(a, c);
  EXPECT_EQ(e.b(), direct_sum(a, c).group);
  const DirectSum s = direct_sum(a, c);
  EXPECT_EQ(e.j(), s.injections[0]);
  EXPECT_EQ(e.q(), s.projections[1]);
}

TEST(Snake, DoublingLadder) {
  const ShortExactSeq e = doubling();
  const SixTermSequence s =
      snake(SnakeInput(e, e, scalar(Z, 2), scalar(Z, 2), scalar(FgGroup::cyclic(2), 0)));
  EXPECT_TRUE(s.groups()[0].is_trivial());
  EXPECT_TRUE(s.groups()[1].is_trivial());
  EXPECT_EQ(s.groups()[2], FgGroup::cyclic(2));
  EXPECT_EQ(s.groups()[3], FgGroup::cyclic(2));
  EXPECT_TRUE(is_isomorphism(s.delta()));
}

TEST(Snake, IdentityVerticals) {
  const ShortExactSeq e = doubling();
  const SixTermSequence s = snake(SnakeInput(e, e, Homomorphism::identity(Z),
                                             Homomorphism::identity(Z),
                                             Homomorphism::identity(FgGroup::cyclic(2))));
  for (const auto& g : s.groups()) EXPECT_TRUE(g.is_trivial());
}

TEST(Snake, ZeroVerticalsDegenerate) {
  gen::Rng rng(5);
  const ShortExactSeq e = gen::ses(rng, 1, 12);
  const SixTermSequence s = snake(SnakeInput(e, e, Homomorphism::zero(e.a(), e.a()),
                                             Homomorphism::zero(e.b(), e.b()),
                                             Homomorphism::zero(e.c(), e.c())));
  EXPECT_TRUE(s.delta().is_zero());
  const FgGroup expected[] = {e.a(), e.b(), e.c(), e.a(), e.b(), e.c()};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(s.groups()[i], expected[i]);
}

TEST(Snake, RejectsNonCommutingLadder) {
  const ShortExactSeq e = doubling();
  EXPECT_THROW(snake(SnakeInput(e, e, scalar(Z, 1), scalar(Z, 3),
                                Homomorphism::identity(FgGroup::cyclic(2)))),
               PreconditionError);
}

TEST(Snake, RandomLaddersExactAndLiftIndependent) {
  gen::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    const SnakeInput in = gen::snake(rng, 32);
    const SixTermSequence a = snake(in);
    const SixTermSequence b = snake(in, LiftPolicy{static_cast<std::uint64_t>(trial) + 1});
    EXPECT_EQ(a.delta(), b.delta());
    for (const auto& c : a.checks()) EXPECT_TRUE(c.exact);
    expect_exact_by_enumeration(a);
  }
}

TEST(LiftElement, SeededLiftsStillLift) {
  const FgGroup z12 = FgGroup::cyclic(12), z4 = FgGroup::cyclic(4);
  const Homomorphism q = map1(z12, z4, {1});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GroupElement x = lift_element(q, el(z4, {3}), LiftPolicy{seed});
    EXPECT_EQ(q(x), el(z4, {3}));
  }
  EXPECT_THROW(lift_element(scalar(z4, 2), el(z4, {1}), {}), PreconditionError);
}

TEST(Retraction, SplitSequenceGivesSecondInjection) {
  const FgGroup a = FgGroup::cyclic(4), c = FgGroup::free(1);
  const ShortExactSeq e = split_sequence(a, c);
  const DirectSum s = direct_sum(a, c);
  EXPECT_EQ(complete_splitting_from_retraction(e, s.projections[0]), s.injections[1]);
}

TEST(Retraction, SixAsTwoPlusThree) {
  const FgGroup z2 = FgGroup::cyclic(2), z3 = FgGroup::cyclic(3), z6 = FgGroup::cyclic(6);
  const ShortExactSeq e(map1(z2, z6, {3}), map1(z6, z3, {1}));
  const Homomorphism r = map1(z6, z2, {1});
  const Homomorphism s = complete_splitting_from_retraction(e, r);
  EXPECT_EQ(s, map1(z3, z6, {4}));
  EXPECT_EQ(e.q() * s, Homomorphism::identity(z3));
  EXPECT_TRUE((r * s).is_zero());
  EXPECT_EQ(e.j() * r + s * e.q(), Homomorphism::identity(z6));
  EXPECT_THROW(complete_splitting_from_retraction(e, Homomorphism::zero(z6, z2)),
               PreconditionError);
}

TEST(Retraction, SectionIsUnique) {
  // Any other section differs by a nonzero map C -> B and breaks r s = 0 or q s = 1.
  const FgGroup z2 = FgGroup::cyclic(2), z3 = FgGroup::cyclic(3), z6 = FgGroup::cyclic(6);
  const ShortExactSeq e(map1(z2, z6, {3}), map1(z6, z3, {1}));
  const Homomorphism r = map1(z6, z2, {1});
  const Homomorphism s = complete_splitting_from_retraction(e, r);
  for (long t = 0; t < 6; ++t) {
    const Homomorphism other = map1(z3, z6, {t * 2 % 6});
    if (other == s) continue;
    EXPECT_FALSE(e.q() * other == Homomorphism::identity(z3) && (r * other).is_zero());
  }
}

TEST(Idempotent, TimesThreeOnSix) {
  const FgGroup z6 = FgGroup::cyclic(6);
  const IdempotentSplitting s = split_by_idempotent(scalar(z6, 3));
  EXPECT_EQ(s.image.group, FgGroup::cyclic(2));
  EXPECT_EQ(s.complement.group, FgGroup::cyclic(3));
  EXPECT_TRUE(is_isomorphism(s.iso));
}

TEST(Idempotent, IdentityAndZero) {
  const FgGroup b(1, {4});
  const IdempotentSplitting one = split_by_idempotent(Homomorphism::identity(b));
  EXPECT_EQ(one.image.group, b);
  EXPECT_TRUE(one.complement.group.is_trivial());
  const IdempotentSplitting zero = split_by_idempotent(Homomorphism::zero(b, b));
  EXPECT_TRUE(zero.image.group.is_trivial());
  EXPECT_EQ(zero.complement.group, b);
  EXPECT_THROW(split_by_idempotent(scalar(FgGroup::cyclic(6), 2)), PreconditionError);
}

TEST(FiveLemma, IdentityVerticals) {
  const ShortExactSeq e = doubling();
  const FgGroup zero;
  const std::vector<Homomorphism> row = {Homomorphism::zero(zero, Z), e.j(), e.q(),
                                         Homomorphism::zero(e.c(), zero)};
  const std::vector<Homomorphism> verticals = {
      Homomorphism::identity(zero), Homomorphism::identity(Z), Homomorphism::identity(Z),
      Homomorphism::identity(e.c()), Homomorphism::identity(zero)};
  EXPECT_TRUE(five_lemma_verify(row, row, verticals).confirmed());
}

TEST(FiveLemma, SplitMiddleIsomorphism) {
  const FgGroup a = FgGroup::cyclic(2), c = FgGroup::cyclic(4), zero;
  const ShortExactSeq e = split_sequence(a, c);
  // Bottom row: the same sum with the summands presented in the other order.
  const DirectSum swapped = direct_sum(c, a);
  const std::vector<Homomorphism> top = {Homomorphism::zero(zero, a), e.j(), e.q(),
                                         Homomorphism::zero(c, zero)};
  const std::vector<Homomorphism> bottom = {Homomorphism::zero(zero, a), swapped.injections[1],
                                            swapped.projections[0], Homomorphism::zero(c, zero)};
  const Homomorphism p2 = swapped.injections[1] * direct_sum(a, c).projections[0] +
                          swapped.injections[0] * direct_sum(a, c).projections[1];
  const std::vector<Homomorphism> verticals = {Homomorphism::identity(zero),
                                               Homomorphism::identity(a), p2,
                                               Homomorphism::identity(c),
                                               Homomorphism::identity(zero)};
  EXPECT_TRUE(five_lemma_verify(top, bottom, verticals).confirmed());
}

TEST(FiveLemma, NonCommutingDiagramIsAnError) {
  const ShortExactSeq e = doubling();
  const FgGroup zero;
  const std::vector<Homomorphism> row = {Homomorphism::zero(zero, Z), e.j(), e.q(),
                                         Homomorphism::zero(e.c(), zero)};
  const std::vector<Homomorphism> verticals = {
      Homomorphism::identity(zero), Homomorphism::identity(Z), scalar(Z, -1),
      Homomorphism::identity(e.c()), Homomorphism::identity(zero)};
  EXPECT_THROW(five_lemma_verify(row, row, verticals), PreconditionError);
}
