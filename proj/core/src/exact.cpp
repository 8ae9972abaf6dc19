#include "fgab/exact.hpp"

#include "fgab/error.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fgab {

namespace {

constexpr unsigned long kWitnessEnumerationLimit = 4096;

// Lexicographically least element satisfying `pred`, if the group is small
// enough to enumerate.
std::optional<GroupElement> least_element(
    const FgGroup& g, const std::function<bool(const GroupElement&)>& pred) {
  if (!g.is_finite() || g.order() > kWitnessEnumerationLimit) return std::nullopt;
  for (const auto& x : elements(g))
    if (pred(x)) return x;
  return std::nullopt;
}

std::string describe(const ExactnessCheck& c) {
  std::string s = c.reason;
  if (c.witness) s += ", witness " + c.witness->to_string();
  return s;
}

}  // namespace

ExactnessCheck is_exact_at(const Homomorphism& f, const Homomorphism& g) {
  if (f.codomain() != g.domain())
    throw PreconditionError("is_exact_at: codomain " + f.codomain().to_string() +
                            " is not the domain " + g.domain().to_string());
  const FgGroup& b = g.domain();
  const bool composite_zero = compose(g, f).is_zero();
  const Subgroup k = kernel(g);
  bool kernel_in_image = true;
  for (std::size_t i = 0; i < k.group.generator_count() && kernel_in_image; ++i)
    kernel_in_image = in_span(b, f.matrix(), k.inclusion.image_of_generator(i));
  if (composite_zero && kernel_in_image) return {};

  ExactnessCheck out;
  out.exact = false;
  auto in_image = [&](const GroupElement& x) { return in_span(b, f.matrix(), x); };
  out.witness = least_element(b, [&](const GroupElement& x) {
    return in_image(x) != g(x).is_zero();
  });
  if (out.witness) {
    out.reason = in_image(*out.witness) ? "image element not in the kernel"
                                        : "kernel element not in the image";
    return out;
  }
  if (!composite_zero) {
    out.reason = "image element not in the kernel";
    for (std::size_t j = 0; j < f.domain().generator_count(); ++j)
      if (!g(f.image_of_generator(j)).is_zero()) {
        out.witness = f.image_of_generator(j);
        break;
      }
  } else {
    out.reason = "kernel element not in the image";
    for (std::size_t i = 0; i < k.group.generator_count(); ++i) {
      GroupElement x = k.inclusion.image_of_generator(i);
      if (!in_image(x)) {
        out.witness = x;
        break;
      }
    }
  }
  return out;
}

ExactnessCheck check_injective(const Homomorphism& f) {
  const Subgroup k = kernel(f);
  if (k.group.is_trivial()) return {};
  ExactnessCheck out;
  out.exact = false;
  out.reason = "map is not injective";
  out.witness = least_element(f.domain(), [&](const GroupElement& x) {
    return !x.is_zero() && f(x).is_zero();
  });
  if (!out.witness) out.witness = k.inclusion.image_of_generator(0);
  return out;
}

ExactnessCheck check_surjective(const Homomorphism& g) {
  const FgGroup& c = g.codomain();
  if (cokernel(g).group.is_trivial()) return {};
  ExactnessCheck out;
  out.exact = false;
  out.reason = "map is not surjective";
  out.witness = least_element(c, [&](const GroupElement& y) {
    return !in_span(c, g.matrix(), y);
  });
  if (!out.witness) {
    for (std::size_t i = 0; i < c.generator_count(); ++i) {
      GroupElement y = GroupElement::generator(c, i);
      if (!in_span(c, g.matrix(), y)) {
        out.witness = y;
        break;
      }
    }
  }
  return out;
}

// ----------------------------------------------------------- ShortExactSeq

ShortExactSeq::ShortExactSeq(Homomorphism j, Homomorphism q)
    : j_(std::move(j)), q_(std::move(q)) {
  if (auto c = check_injective(j_); !c)
    throw PreconditionError("not short exact: first map " + describe(c));
  if (auto c = is_exact_at(j_, q_); !c)
    throw PreconditionError("not short exact at the middle: " + describe(c));
  if (auto c = check_surjective(q_); !c)
    throw PreconditionError("not short exact: second map " + describe(c));
}

ShortExactSeq split_sequence(const FgGroup& a, const FgGroup& c) {
  DirectSum s = direct_sum(a, c);
  return ShortExactSeq(s.injections[0], s.projections[1]);
}

// --------------------------------------------------------- SixTermSequence

SixTermSequence::SixTermSequence(std::string kind, std::vector<FgGroup> groups,
                                 std::vector<Homomorphism> maps)
    : kind_(std::move(kind)), groups_(std::move(groups)), maps_(std::move(maps)) {
  if (groups_.size() != 6 || maps_.size() != 5)
    throw PreconditionError("a six-term sequence needs six groups and five maps");
  for (std::size_t i = 0; i < 5; ++i)
    if (maps_[i].domain() != groups_[i] || maps_[i].codomain() != groups_[i + 1])
      throw PreconditionError(kind_ + ": map " + std::to_string(i) +
                              " does not connect its neighbouring groups");
  checks_.push_back(check_injective(maps_[0]));
  for (std::size_t i = 1; i < 5; ++i) checks_.push_back(is_exact_at(maps_[i - 1], maps_[i]));
  checks_.push_back(check_surjective(maps_[4]));
  for (std::size_t i = 0; i < checks_.size(); ++i)
    if (!checks_[i])
      throw PreconditionError(kind_ + " sequence is not exact at node " +
                              std::to_string(i) + ": " + describe(checks_[i]));
}

// ------------------------------------------------------------------- snake

SnakeInput::SnakeInput(ShortExactSeq top_row, ShortExactSeq bottom_row, Homomorphism f_map,
                       Homomorphism g_map, Homomorphism h_map)
    : top(std::move(top_row)),
      bottom(std::move(bottom_row)),
      f(std::move(f_map)),
      g(std::move(g_map)),
      h(std::move(h_map)) {
  if (f.domain() != top.a() || f.codomain() != bottom.a() || g.domain() != top.b() ||
      g.codomain() != bottom.b() || h.domain() != top.c() || h.codomain() != bottom.c())
    throw PreconditionError("snake: vertical maps do not connect the rows");
  if (compose(g, top.j()) != compose(bottom.j(), f))
    throw PreconditionError("snake: left square does not commute");
  if (compose(h, top.q()) != compose(bottom.q(), g))
    throw PreconditionError("snake: right square does not commute");
}

GroupElement lift_element(const Homomorphism& f, const GroupElement& y,
                          const LiftPolicy& policy, std::uint64_t salt) {
  auto x = preimage(f, y);
  if (!x) throw PreconditionError("element " + y.to_string() + " has no preimage");
  if (!policy.seed) return *x;
  std::mt19937_64 rng(*policy.seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  std::uniform_int_distribution<long> coeff(-3, 3);
  const Subgroup k = kernel(f);
  IntVector r(k.group.generator_count());
  for (auto& c : r) c = coeff(rng);
  return *x + k.inclusion.apply(r);
}

SixTermSequence snake(const SnakeInput& s, const LiftPolicy& policy, std::string kind) {
  const Subgroup kf = kernel(s.f), kg = kernel(s.g), kh = kernel(s.h);
  const Quotient cf = cokernel(s.f), cg = cokernel(s.g), ch = cokernel(s.h);

  Homomorphism k0 = lift_through_injection(kg.inclusion, compose(s.top.j(), kf.inclusion));
  Homomorphism k1 = lift_through_injection(kh.inclusion, compose(s.top.q(), kg.inclusion));

  std::vector<GroupElement> delta_images;
  for (std::size_t x = 0; x < kh.group.generator_count(); ++x) {
    const GroupElement c = kh.inclusion.image_of_generator(x);
    const GroupElement b = lift_element(s.top.q(), c, policy, x);
    auto a = preimage(s.bottom.j(), s.g(b));
    if (!a) throw std::logic_error("snake: g(b) is not in the image of j'");
    delta_images.push_back(cf.projection(*a));
  }
  Homomorphism delta = Homomorphism::from_images(kh.group, cf.group, delta_images);

  Homomorphism c0 = descend_through_surjection(cf.projection,
                                               compose(cg.projection, s.bottom.j()));
  Homomorphism c1 = descend_through_surjection(cg.projection,
                                               compose(ch.projection, s.bottom.q()));
  return SixTermSequence(
      std::move(kind), {kf.group, kg.group, kh.group, cf.group, cg.group, ch.group},
      {std::move(k0), std::move(k1), std::move(delta), std::move(c0), std::move(c1)});
}

// --------------------------------------------------------------- splitting

Homomorphism complete_splitting_from_retraction(const ShortExactSeq& e,
                                                const Homomorphism& r) {
  if (r.domain() != e.b() || r.codomain() != e.a())
    throw PreconditionError("retraction must map the middle group to the first");
  if (compose(r, e.j()) != Homomorphism::identity(e.a()))
    throw PreconditionError("r is not a retraction: r j is not the identity");
  const Homomorphism one_b = Homomorphism::identity(e.b());
  Homomorphism s = descend_through_surjection(e.q(), one_b - compose(e.j(), r));
  if (compose(e.q(), s) != Homomorphism::identity(e.c()) || !compose(r, s).is_zero() ||
      compose(e.j(), r) + compose(s, e.q()) != one_b || !compose(e.q(), e.j()).is_zero())
    throw std::logic_error("splitting identities failed");
  return s;
}

IdempotentSplitting split_by_idempotent(const Homomorphism& e) {
  if (e.domain() != e.codomain())
    throw PreconditionError("idempotent must be an endomorphism");
  if (compose(e, e) != e) throw PreconditionError("map is not idempotent: e e != e");
  Subgroup im = image(e);
  Subgroup co = image(Homomorphism::identity(e.domain()) - e);
  DirectSum sum = direct_sum(im.group, co.group);
  Homomorphism iso = sum.copair({im.inclusion, co.inclusion});
  if (!is_isomorphism(iso)) throw std::logic_error("idempotent splitting is not a direct sum");
  return IdempotentSplitting{std::move(im), std::move(co), std::move(sum), std::move(iso)};
}

// --------------------------------------------------------------- five lemma

FiveLemmaReport five_lemma_verify(const std::vector<Homomorphism>& top,
                                  const std::vector<Homomorphism>& bottom,
                                  const std::vector<Homomorphism>& p) {
  if (top.size() != 4 || bottom.size() != 4 || p.size() != 5)
    throw PreconditionError("five lemma needs rows of four maps and five verticals");
  auto node = [](const std::vector<Homomorphism>& row, std::size_t i) -> const FgGroup& {
    return i < 4 ? row[i].domain() : row[3].codomain();
  };
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    if (top[i].codomain() != top[i + 1].domain())
      throw PreconditionError("top row maps do not compose at position " + std::to_string(i + 1));
    if (bottom[i].codomain() != bottom[i + 1].domain())
      throw PreconditionError("bottom row maps do not compose at position " +
                              std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < 5; ++i)
    if (p[i].domain() != node(top, i) || p[i].codomain() != node(bottom, i))
      throw PreconditionError("vertical p" + std::to_string(i) + " does not connect the rows");
  for (std::size_t i = 1; i < 4; ++i) {
    if (auto c = is_exact_at(top[i - 1], top[i]); !c)
      throw PreconditionError("top row is not exact at position " + std::to_string(i) + ": " +
                              describe(c));
    if (auto c = is_exact_at(bottom[i - 1], bottom[i]); !c)
      throw PreconditionError("bottom row is not exact at position " + std::to_string(i) +
                              ": " + describe(c));
  }
  for (std::size_t i = 0; i < 4; ++i)
    if (compose(bottom[i], p[i]) != compose(p[i + 1], top[i]))
      throw PreconditionError("square " + std::to_string(i) + " does not commute");
  for (std::size_t i : {0u, 1u, 3u, 4u})
    if (!is_isomorphism(p[i]))
      throw PreconditionError("vertical p" + std::to_string(i) + " is not an isomorphism");
  return FiveLemmaReport{is_injective(p[2]), is_surjective(p[2])};
}

}  // namespace fgab
