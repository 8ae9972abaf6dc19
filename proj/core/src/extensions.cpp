#include "fgab/extensions.hpp"

#include "fgab/error.hpp"

namespace fgab {

Extension pullback(const Extension& e, const Homomorphism& h) {
  if (h.codomain() != e.c()) throw PreconditionError("pullback: map does not land in C");
  DirectSum s = direct_sum(e.b(), h.domain());
  Subgroup fiber = kernel(s.copair({e.q(), -h}));
  Homomorphism i = lift_through_injection(fiber.inclusion, compose(s.injections[0], e.j()));
  Homomorphism p = compose(s.projections[1], fiber.inclusion);
  return Extension(std::move(i), std::move(p));
}

Extension pushout(const Extension& e, const Homomorphism& f) {
  if (f.domain() != e.a()) throw PreconditionError("pushout: map does not start at A");
  DirectSum s = direct_sum(f.codomain(), e.b());
  Quotient q = cokernel(s.pair({f, -e.j()}));
  Homomorphism i = compose(q.projection, s.injections[0]);
  Homomorphism p = descend_through_surjection(
      q.projection, s.copair({Homomorphism::zero(f.codomain(), e.c()), e.q()}));
  return Extension(std::move(i), std::move(p));
}

Extension baer_sum(const Extension& e0, const Extension& e1) {
  if (e0.a() != e1.a() || e0.c() != e1.c())
    throw PreconditionError("Baer sum needs extensions with the same end groups");
  DirectSum s = direct_sum(e0.b(), e1.b());
  Subgroup u = kernel(s.copair({e0.q(), -e1.q()}));
  Homomorphism v = lift_through_injection(u.inclusion, s.pair({e0.j(), -e1.j()}));
  Quotient w = cokernel(v);
  Homomorphism i = compose(
      w.projection, lift_through_injection(u.inclusion, compose(s.injections[0], e0.j())));
  Homomorphism p = descend_through_surjection(
      w.projection, compose(e0.q(), compose(s.projections[0], u.inclusion)));
  return Extension(std::move(i), std::move(p));
}

Extension class_to_extension(const ExtClass& c) {
  ExtGroup x = ext(c.c, c.a);
  if (c.element.parent() != x.group())
    throw PreconditionError("class is not an element of Ext(" + c.c.to_string() + ", " +
                            c.a.to_string() + ")");
  const FreeResolution& r = x.resolution;
  return pushout(Extension(r.incl, r.proj), x.representative(c.element));
}

ExtClass extension_to_class(const Extension& e) {
  ExtGroup x = ext(e.c(), e.a());
  const FreeResolution& r = x.resolution;
  std::vector<GroupElement> images;
  for (std::size_t k = 0; k < r.f.generator_count(); ++k) {
    auto b = preimage(e.q(), r.proj.image_of_generator(k));
    if (!b) throw PreconditionError("extension map onto C is not surjective");
    images.push_back(*b);
  }
  Homomorphism beta = Homomorphism::from_images(r.f, e.b(), images);
  Homomorphism alpha = lift_through_injection(e.j(), compose(beta, r.incl));
  return ExtClass{e.c(), e.a(), x.class_of(alpha)};
}

EquivalenceResult equivalent(const Extension& e0, const Extension& e1,
                             unsigned long search_limit) {
  if (e0.a() != e1.a() || e0.c() != e1.c())
    throw PreconditionError("equivalence needs extensions with the same end groups");
  EquivalenceResult out;
  out.equivalent = extension_to_class(e0).element == extension_to_class(e1).element;
  if (!out.equivalent || e0.b() != e1.b()) return out;
  HomGroup h = hom_group(e0.b(), e1.b());
  if (!h.group().is_finite() || h.group().order() > search_limit) return out;
  for (const auto& x : elements(h.group(), search_limit)) {
    Homomorphism f = h.realize(x);
    if (compose(f, e0.j()) == e1.j() && compose(e1.q(), f) == e0.q()) {
      out.certificate = std::move(f);
      break;
    }
  }
  return out;
}

}  // namespace fgab
