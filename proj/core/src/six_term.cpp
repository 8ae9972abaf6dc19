#include "fgab/six_term.hpp"

#include "fgab/error.hpp"

namespace fgab {

SixTermSequence six_term_mod_n(const ShortExactSeq& e, const Integer& n,
                               const LiftPolicy& policy) {
  if (n < 1) throw PreconditionError("n must be positive");
  SnakeInput ladder(e, e, Homomorphism::scalar(e.a(), n), Homomorphism::scalar(e.b(), n),
                    Homomorphism::scalar(e.c(), n));
  return snake(ladder, policy, "mod-n");
}

SixTermSequence six_term_tor(const FgGroup& u, const ShortExactSeq& e,
                             const LiftPolicy& policy) {
  const Homomorphism one_u = Homomorphism::identity(u);
  const FreeResolution r = free_resolution(u);
  const TorGroup tor_c = tor(u, e.c());

  // Chase through F'_U (x) - -> F_U (x) -, landing in U (x) A.
  const Homomorphism fp_q = tensor_map(Homomorphism::identity(r.f_prime), e.q());
  const Homomorphism incl_b = tensor_map(r.incl, Homomorphism::identity(e.b()));
  const Homomorphism f_j = tensor_map(Homomorphism::identity(r.f), e.j());
  const Homomorphism proj_a = tensor_map(r.proj, Homomorphism::identity(e.a()));
  std::vector<GroupElement> images;
  for (std::size_t x = 0; x < tor_c.group().generator_count(); ++x) {
    const GroupElement z = tor_c.kernel.inclusion.image_of_generator(x);
    const GroupElement w = incl_b(lift_element(fp_q, z, policy, x));
    auto a = preimage(f_j, w);
    if (!a) throw PreconditionError("tor connecting map: chase left the image of 1 (x) j");
    images.push_back(proj_a(*a));
  }
  Homomorphism delta = Homomorphism::from_images(tor_c.group(), proj_a.codomain(), images);

  Homomorphism t0 = induced_tor(one_u, e.j());
  Homomorphism t1 = induced_tor(one_u, e.q());
  Homomorphism s0 = tensor_map(one_u, e.j());
  Homomorphism s1 = tensor_map(one_u, e.q());
  std::vector<FgGroup> groups{t0.domain(), t0.codomain(), t1.codomain(),
                              s0.domain(), s0.codomain(), s1.codomain()};
  return SixTermSequence("tor", std::move(groups),
                         {std::move(t0), std::move(t1), std::move(delta), std::move(s0),
                          std::move(s1)});
}

namespace {

// beta : F -> B with q beta = target, one lifted generator at a time.
Homomorphism lift_free(const Homomorphism& q, const Homomorphism& target,
                       const LiftPolicy& policy) {
  std::vector<GroupElement> images;
  for (std::size_t k = 0; k < target.domain().generator_count(); ++k)
    images.push_back(lift_element(q, target.image_of_generator(k), policy, k));
  return Homomorphism::from_images(target.domain(), q.domain(), images);
}

}  // namespace

SixTermSequence six_term_ext_cov(const FgGroup& u, const ShortExactSeq& e,
                                 const LiftPolicy& policy) {
  const Homomorphism one_u = Homomorphism::identity(u);
  const FreeResolution r = free_resolution(u);
  const HomGroup hom_c = hom_group(u, e.c());
  const ExtGroup ext_a = ext(u, e.a());

  std::vector<GroupElement> images;
  for (const auto& phi : hom_c.basis()) {
    const Homomorphism beta = lift_free(e.q(), compose(phi, r.proj), policy);
    const Homomorphism alpha = lift_through_injection(e.j(), compose(beta, r.incl));
    images.push_back(ext_a.class_of(alpha));
  }
  Homomorphism delta = Homomorphism::from_images(hom_c.group(), ext_a.group(), images);

  Homomorphism h0 = induced_hom(one_u, e.j());
  Homomorphism h1 = induced_hom(one_u, e.q());
  Homomorphism x0 = induced_ext(one_u, e.j());
  Homomorphism x1 = induced_ext(one_u, e.q());
  std::vector<FgGroup> groups{h0.domain(), h0.codomain(), h1.codomain(),
                              x0.domain(), x0.codomain(), x1.codomain()};
  return SixTermSequence("ext-cov", std::move(groups),
                         {std::move(h0), std::move(h1), std::move(delta), std::move(x0),
                          std::move(x1)});
}

SixTermSequence six_term_ext_contra(const ShortExactSeq& e, const FgGroup& v,
                                    const LiftPolicy& policy) {
  const Homomorphism one_v = Homomorphism::identity(v);
  const FreeResolution r = free_resolution(e.c());
  const HomGroup hom_a = hom_group(e.a(), v);
  const ExtGroup ext_c = ext(e.c(), v);

  const Homomorphism beta = lift_free(e.q(), r.proj, policy);
  const Homomorphism alpha = lift_through_injection(e.j(), compose(beta, r.incl));
  std::vector<GroupElement> images;
  for (const auto& phi : hom_a.basis()) images.push_back(ext_c.class_of(compose(phi, alpha)));
  Homomorphism delta = Homomorphism::from_images(hom_a.group(), ext_c.group(), images);

  Homomorphism h0 = induced_hom(e.q(), one_v);
  Homomorphism h1 = induced_hom(e.j(), one_v);
  Homomorphism x0 = induced_ext(e.q(), one_v);
  Homomorphism x1 = induced_ext(e.j(), one_v);
  std::vector<FgGroup> groups{h0.domain(), h0.codomain(), h1.codomain(),
                              x0.domain(), x0.codomain(), x1.codomain()};
  return SixTermSequence("ext-contra", std::move(groups),
                         {std::move(h0), std::move(h1), std::move(delta), std::move(x0),
                          std::move(x1)});
}

}  // namespace fgab
