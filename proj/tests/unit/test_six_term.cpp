#include "fgab/extensions.hpp"
#include "fgab/functors.hpp"
#include "fgab/six_term.hpp"
#include "oracle.hpp"
#include "random.hpp"

#include <gtest/gtest.h>

using namespace fgab;

namespace {

const FgGroup Z = FgGroup::free(1);

FgGroup cyc(long n) { return FgGroup::cyclic(n); }

GroupElement el(const FgGroup& g, std::initializer_list<long> xs) {
  return GroupElement(g, IntVector(xs.begin(), xs.end()));
}

// Z -2-> Z -> Z/2
ShortExactSeq doubling() {
  return ShortExactSeq(Homomorphism::scalar(Z, 2),
                       Homomorphism::from_images(Z, cyc(2), {el(cyc(2), {1})}));
}

void expect_groups(const SixTermSequence& s, const std::vector<FgGroup>& want) {
  ASSERT_EQ(s.groups().size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(s.groups()[i], want[i]) << "position " << i;
}

void expect_exact(const SixTermSequence& s) {
  for (std::size_t i = 0; i < s.checks().size(); ++i) EXPECT_TRUE(s.checks()[i].exact) << i;
  const auto& m = s.maps();
  if (s.groups()[0].is_finite()) EXPECT_TRUE(oracle::injective(m[0]));
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (s.groups()[i + 1].is_finite()) EXPECT_TRUE(oracle::exact_at(m[i], m[i + 1])) << "node " << i + 1;
  if (s.groups()[5].is_finite()) EXPECT_TRUE(oracle::surjective(m[4]));
}

}  // namespace

TEST(ModN, DoublingSequence) {
  const SixTermSequence s = six_term_mod_n(doubling(), 2);
  const FgGroup z2 = cyc(2), zero;
  expect_groups(s, {zero, zero, z2, z2, z2, z2});
  EXPECT_EQ(s.delta()(el(z2, {1})), el(z2, {1}));
  expect_exact(s);
}

TEST(ModN, NEqualsOneKillsEverything) {
  const SixTermSequence s = six_term_mod_n(doubling(), 1);
  for (const auto& g : s.groups()) EXPECT_TRUE(g.is_trivial());
}

TEST(ModN, SplitSequenceHasZeroDelta) {
  const ShortExactSeq e = split_sequence(FgGroup(1, {4}), cyc(6));
  for (long n : {2L, 3L, 4L, 12L}) {
    const SixTermSequence s = six_term_mod_n(e, n);
    EXPECT_TRUE(s.delta().is_zero());
    expect_exact(s);
  }
}

TEST(Tor, DoublingSequence) {
  const SixTermSequence s = six_term_tor(cyc(2), doubling());
  const FgGroup z2 = cyc(2), zero;
  expect_groups(s, {zero, zero, z2, z2, z2, z2});
  EXPECT_TRUE(is_injective(s.delta()));
  expect_exact(s);
}

TEST(Tor, FreeCoefficientsGiveShortExactTail) {
  const ShortExactSeq e = doubling();
  const SixTermSequence s = six_term_tor(FgGroup::free(2), e);
  for (int i = 0; i < 3; ++i) EXPECT_TRUE(s.groups()[i].is_trivial());
  EXPECT_NO_THROW(ShortExactSeq(s.maps()[3], s.maps()[4]));
}

TEST(Tor, DeltaOnSymbols) {
  // delta(e_n(u, c)) = u (x) a whenever q(b) = c and n b = j(a).
  const FgGroup u = cyc(2);
  const ShortExactSeq e = doubling();
  const SixTermSequence s = six_term_tor(u, e);
  const GroupElement sym = tor_symbol_resolve({2, el(u, {1}), el(cyc(2), {1})});
  EXPECT_EQ(s.delta()(sym), tensor_product(u, Z).pure(el(u, {1}), el(Z, {1})));
}

TEST(Tor, DeltaOnSymbolsRandom) {
  gen::Rng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 30; ++trial) {
    const ShortExactSeq e = gen::ses(rng, 1, 16);
    const FgGroup u = gen::finite_group(rng, 12);
    const long n = gen::uniform(rng, 2, 6);
    const Subgroup un = subgroup_ann(u, n), cn = subgroup_ann(e.c(), n);
    if (un.group.is_trivial() || cn.group.is_trivial()) continue;
    const GroupElement x = un.inclusion(gen::element(rng, un.group));
    const GroupElement c = cn.inclusion(gen::element(rng, cn.group));
    const GroupElement b = *preimage(e.q(), c);
    const GroupElement a = *preimage(e.j(), Integer(n) * b);
    const SixTermSequence s = six_term_tor(u, e);
    EXPECT_EQ(s.delta()(tor_symbol_resolve({n, x, c})), tensor_product(u, e.a()).pure(x, a));
    ++checked;
  }
  EXPECT_EQ(checked, 30);
}

TEST(ExtCov, DoublingSequence) {
  const FgGroup z4 = cyc(4), z2 = cyc(2), zero;
  const SixTermSequence s = six_term_ext_cov(z4, doubling());
  expect_groups(s, {zero, zero, z2, z4, z4, z2});
  EXPECT_TRUE(is_injective(s.delta()));
  EXPECT_EQ(s.delta()(el(z2, {1})), el(z4, {2}));
  EXPECT_EQ(s.maps()[3], Homomorphism::scalar(z4, 2));
  expect_exact(s);
}

TEST(ExtContra, DoublingSequence) {
  const FgGroup z2 = cyc(2), zero;
  const SixTermSequence s = six_term_ext_contra(doubling(), Z);
  expect_groups(s, {zero, Z, Z, z2, zero, zero});
  EXPECT_EQ(s.maps()[1], Homomorphism::scalar(Z, 2));
  EXPECT_EQ(s.delta()(el(Z, {1})), el(z2, {1}));
  expect_exact(s);
}

TEST(Ext, SplitSequencesHaveZeroDelta) {
  const ShortExactSeq e = split_sequence(cyc(4), FgGroup(1, {2}));
  for (const FgGroup& u : {cyc(2), cyc(4), Z, FgGroup(1, {6})}) {
    EXPECT_TRUE(six_term_ext_cov(u, e).delta().is_zero());
    EXPECT_TRUE(six_term_ext_contra(e, u).delta().is_zero());
  }
}

TEST(Random, AllSequencesExactAndDeltaIndependentOfLifts) {
  gen::Rng rng(62);
  for (int trial = 0; trial < 30; ++trial) {
    const ShortExactSeq e = gen::ses(rng, 2, 16);
    const FgGroup u = gen::group(rng, 1, 16);
    const long n = gen::uniform(rng, 1, 12);
    const LiftPolicy seeded{static_cast<std::uint64_t>(1000 + trial)};
    const SixTermSequence runs[][2] = {
        {six_term_mod_n(e, n), six_term_mod_n(e, n, seeded)},
        {six_term_tor(u, e), six_term_tor(u, e, seeded)},
        {six_term_ext_cov(u, e), six_term_ext_cov(u, e, seeded)},
        {six_term_ext_contra(e, u), six_term_ext_contra(e, u, seeded)},
    };
    for (const auto& pair : runs) {
      expect_exact(pair[0]);
      EXPECT_EQ(pair[0].delta(), pair[1].delta()) << pair[0].kind();
    }
  }
}

TEST(Ext, DeltaAgreesWithExtensionClasses) {
  // delta(phi) = phi_* [E] (contravariant) and phi^* [E] (covariant); in
  // particular the identity goes to the class of E itself.
  gen::Rng rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const ShortExactSeq e = gen::ses(rng, 2, 16);
    const GroupElement cls = extension_to_class(e).element;
    const HomGroup end_a = hom_group(e.a(), e.a()), end_c = hom_group(e.c(), e.c());
    EXPECT_EQ(six_term_ext_contra(e, e.a()).delta()(end_a.coordinates_of(Homomorphism::identity(e.a()))), cls);
    EXPECT_EQ(six_term_ext_cov(e.c(), e).delta()(end_c.coordinates_of(Homomorphism::identity(e.c()))), cls);

    const FgGroup v = gen::group(rng, 1, 12);
    const Homomorphism phi = gen::hom(rng, e.a(), v);
    EXPECT_EQ(six_term_ext_contra(e, v).delta()(hom_group(e.a(), v).coordinates_of(phi)),
              extension_to_class(pushout(e, phi)).element);
    const Homomorphism psi = gen::hom(rng, v, e.c());
    EXPECT_EQ(six_term_ext_cov(v, e).delta()(hom_group(v, e.c()).coordinates_of(psi)),
              extension_to_class(pullback(e, psi)).element);
  }
}
