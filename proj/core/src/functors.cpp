#include "fgab/functors.hpp"

#include "fgab/error.hpp"

#include <stdexcept>

namespace fgab {

FreeResolution free_resolution(const FgGroup& a) {
  const std::size_t n = a.generator_count();
  const std::size_t t = a.torsion_rank();
  FgGroup f = FgGroup::free(n);
  FgGroup fp = FgGroup::free(t);
  IntMatrix incl(n, t);
  for (std::size_t i = 0; i < t; ++i) incl(i, i) = a.invariant_factors()[i];
  return FreeResolution{a, f, fp, Homomorphism(fp, f, std::move(incl)),
                        Homomorphism(f, a, IntMatrix::identity(n))};
}

Homomorphism resolution_lift(const Homomorphism& f) {
  const FgGroup& a = f.domain();
  const FgGroup& b = f.codomain();
  IntMatrix g(b.torsion_rank(), a.torsion_rank());
  for (std::size_t k = 0; k < b.torsion_rank(); ++k)
    for (std::size_t j = 0; j < a.torsion_rank(); ++j) {
      Integer v = f.matrix()(k, j) * a.invariant_factors()[j];
      // Exact by well-definedness of f.
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), b.invariant_factors()[k].get_mpz_t());
      g(k, j) = v;
    }
  return Homomorphism(FgGroup::free(a.torsion_rank()), FgGroup::free(b.torsion_rank()),
                      std::move(g));
}

// ------------------------------------------------------------------ tensor

TensorProduct tensor_product(const FgGroup& a, const FgGroup& b) {
  IntVector orders;
  orders.reserve(a.generator_count() * b.generator_count());
  for (std::size_t j = 0; j < a.generator_count(); ++j)
    for (std::size_t i = 0; i < b.generator_count(); ++i)
      orders.push_back(gcd(a.generator_order(j), b.generator_order(i)));
  return TensorProduct{a, b, classify_cyclic_sum(orders)};
}

GroupElement TensorProduct::pure(const GroupElement& x, const GroupElement& y) const {
  if (x.parent() != a || y.parent() != b)
    throw PreconditionError("pure tensor factors are not in the tensor's groups");
  const std::size_t nb = b.generator_count();
  IntVector raw(a.generator_count() * nb);
  for (std::size_t j = 0; j < a.generator_count(); ++j)
    for (std::size_t i = 0; i < nb; ++i) raw[pair_index(j, i, nb)] = x.coords()[j] * y.coords()[i];
  return cls.image(raw);
}

Homomorphism tensor_map(const Homomorphism& f, const Homomorphism& g) {
  TensorProduct src = tensor_product(f.domain(), g.domain());
  TensorProduct dst = tensor_product(f.codomain(), g.codomain());
  const std::size_t na = f.domain().generator_count(), nb = g.domain().generator_count();
  const std::size_t ma = f.codomain().generator_count(), mb = g.codomain().generator_count();
  IntMatrix raw(ma * mb, na * nb);
  for (std::size_t k = 0; k < ma; ++k)
    for (std::size_t j = 0; j < na; ++j) {
      const Integer& fkj = f.matrix()(k, j);
      if (fkj == 0) continue;
      for (std::size_t l = 0; l < mb; ++l)
        for (std::size_t i = 0; i < nb; ++i)
          raw(pair_index(k, l, mb), pair_index(j, i, nb)) = fkj * g.matrix()(l, i);
    }
  return Homomorphism(src.group(), dst.group(),
                      dst.cls.to_canonical * raw * src.cls.from_canonical);
}

// --------------------------------------------------------------------- hom

HomGroup hom_group(const FgGroup& a, const FgGroup& b) {
  const std::size_t na = a.generator_count(), nb = b.generator_count();
  IntVector orders(na * nb), mult(na * nb);
  for (std::size_t j = 0; j < na; ++j)
    for (std::size_t i = 0; i < nb; ++i) {
      const Integer oa = a.generator_order(j), ob = b.generator_order(i);
      const std::size_t k = pair_index(j, i, nb);
      if (oa == 0) {
        orders[k] = ob;  // Hom(Z, Z) = Z, Hom(Z, Z/b) = Z/b
        mult[k] = 1;
      } else if (ob == 0) {
        orders[k] = 1;  // Hom(Z/a, Z) = 0
        mult[k] = 0;
      } else {
        const Integer g = gcd(oa, ob);
        orders[k] = g;  // generated by 1 |-> b/g
        mult[k] = ob / g;
      }
    }
  return HomGroup{a, b, classify_cyclic_sum(orders), std::move(mult)};
}

GroupElement HomGroup::coordinates_of(const Homomorphism& phi) const {
  if (phi.domain() != a || phi.codomain() != b)
    throw PreconditionError("homomorphism is not in Hom(" + a.to_string() + ", " +
                            b.to_string() + ")");
  const std::size_t na = a.generator_count(), nb = b.generator_count();
  IntVector raw(na * nb);
  for (std::size_t j = 0; j < na; ++j)
    for (std::size_t i = 0; i < nb; ++i) {
      const std::size_t k = pair_index(j, i, nb);
      if (multipliers[k] == 0) continue;
      Integer v = phi.matrix()(i, j);
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), multipliers[k].get_mpz_t());
      raw[k] = v;
    }
  return cls.image(raw);
}

Homomorphism HomGroup::realize(const GroupElement& x) const {
  if (x.parent() != cls.group) throw PreconditionError("element is not in the Hom group");
  const IntVector raw = cls.lift(x);
  const std::size_t na = a.generator_count(), nb = b.generator_count();
  IntMatrix m(nb, na);
  for (std::size_t j = 0; j < na; ++j)
    for (std::size_t i = 0; i < nb; ++i) {
      const std::size_t k = pair_index(j, i, nb);
      m(i, j) = raw[k] * multipliers[k];
    }
  return Homomorphism(a, b, std::move(m));
}

std::vector<Homomorphism> HomGroup::basis() const {
  std::vector<Homomorphism> out;
  for (std::size_t k = 0; k < cls.group.generator_count(); ++k)
    out.push_back(realize(GroupElement::generator(cls.group, k)));
  return out;
}

Homomorphism induced_hom(const Homomorphism& f, const Homomorphism& g) {
  HomGroup src = hom_group(f.codomain(), g.domain());
  HomGroup dst = hom_group(f.domain(), g.codomain());
  IntMatrix m(dst.group().generator_count(), src.group().generator_count());
  for (std::size_t k = 0; k < src.group().generator_count(); ++k) {
    const Homomorphism phi = src.realize(GroupElement::generator(src.group(), k));
    m.set_column(k, dst.coordinates_of(compose(g, compose(phi, f))).coords());
  }
  return Homomorphism(src.group(), dst.group(), std::move(m));
}

// --------------------------------------------------------------------- tor

TorGroup tor(const FgGroup& a, const FgGroup& b) {
  FreeResolution r = free_resolution(a);
  Subgroup k = kernel(tensor_map(r.incl, Homomorphism::identity(b)));
  return TorGroup{a, b, std::move(r), std::move(k)};
}

Homomorphism induced_tor(const Homomorphism& f, const Homomorphism& g) {
  TorGroup src = tor(f.domain(), g.domain());
  TorGroup dst = tor(f.codomain(), g.codomain());
  Homomorphism chain = tensor_map(resolution_lift(f), g);
  return lift_through_injection(dst.kernel.inclusion, compose(chain, src.kernel.inclusion));
}

namespace {

void require_symbol(const TorSymbol& s) {
  if (s.n < 1) throw PreconditionError("symbol index n must be positive");
  if (!(s.n * s.a).is_zero() || !(s.n * s.b).is_zero())
    throw PreconditionError("symbol requires n a = 0 and n b = 0");
}

GroupElement into_tor(const TorGroup& t, const GroupElement& x) {
  auto y = preimage(t.kernel.inclusion, x);
  if (!y) throw std::logic_error("symbol does not lie in the Tor kernel");
  return *y;
}

}  // namespace

GroupElement tor_symbol_embed(const TorSymbol& s) {
  require_symbol(s);
  const FgGroup& a = s.a.parent();
  TorGroup t = tor(a, s.b.parent());
  IntVector x(a.torsion_rank());
  for (std::size_t j = 0; j < x.size(); ++j)
    x[j] = s.n * s.a.coords()[j] / a.invariant_factors()[j];
  TensorProduct p = tensor_product(t.resolution.f_prime, s.b.parent());
  return into_tor(t, p.pure(GroupElement(t.resolution.f_prime, x), s.b));
}

GroupElement tor_symbol_resolve(const TorSymbol& s) {
  require_symbol(s);
  const FgGroup& a = s.a.parent();
  const FgGroup& b = s.b.parent();
  TorGroup t = tor(a, b);
  TensorProduct p = tensor_product(t.resolution.f_prime, b);
  GroupElement total = GroupElement::zero(t.group());
  for (std::size_t j = 0; j < a.torsion_rank(); ++j) {
    if (s.a.coords()[j] == 0) continue;
    const Integer& dj = a.invariant_factors()[j];
    for (std::size_t i = 0; i < b.torsion_rank(); ++i) {
      if (s.b.coords()[i] == 0) continue;
      const Integer& di = b.invariant_factors()[i];
      // e_n(x e_j, y e_i) = (n x y / t) e_t(e_j, e_i), t = lcm(d_j, d_i).
      const Integer tt = lcm(dj, di);
      const Integer coeff = s.n * s.a.coords()[j] * s.b.coords()[i] / tt;
      IntVector x(a.torsion_rank());
      x[j] = tt / dj;
      GroupElement unit = into_tor(
          t, p.pure(GroupElement(t.resolution.f_prime, x), GroupElement::generator(b, i)));
      total = total + coeff * unit;
    }
  }
  return total;
}

// --------------------------------------------------------------------- ext

ExtGroup ext(const FgGroup& a, const FgGroup& b) {
  FreeResolution r = free_resolution(a);
  HomGroup cochains = hom_group(r.f_prime, b);
  Quotient q = cokernel(induced_hom(r.incl, Homomorphism::identity(b)));
  return ExtGroup{a, b, std::move(r), std::move(cochains), std::move(q)};
}

GroupElement ExtGroup::class_of(const Homomorphism& alpha) const {
  return quotient.projection(cochains.coordinates_of(alpha));
}

Homomorphism ExtGroup::representative(const GroupElement& x) const {
  if (x.parent() != quotient.group) throw PreconditionError("element is not in the Ext group");
  IntVector c = quotient.section * std::span<const Integer>(x.coords());
  return cochains.realize(GroupElement(cochains.group(), std::move(c)));
}

Homomorphism induced_ext(const Homomorphism& f, const Homomorphism& g) {
  ExtGroup src = ext(f.codomain(), g.domain());
  ExtGroup dst = ext(f.domain(), g.codomain());
  const Homomorphism lift = resolution_lift(f);
  IntMatrix m(dst.group().generator_count(), src.group().generator_count());
  for (std::size_t k = 0; k < src.group().generator_count(); ++k) {
    const Homomorphism alpha = src.representative(GroupElement::generator(src.group(), k));
    m.set_column(k, dst.class_of(compose(g, compose(alpha, lift))).coords());
  }
  return Homomorphism(src.group(), dst.group(), std::move(m));
}

}  // namespace fgab
