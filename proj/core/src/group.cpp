#include "fgab/group.hpp"

#include "fgab/error.hpp"
#include "fgab/normal_form.hpp"

#include <sstream>

namespace fgab {

// ---------------------------------------------------------------- FgGroup

FgGroup::FgGroup(std::size_t free_rank, IntVector invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw PreconditionError("invariant factors must be at least 2");
    if (i > 0 && !divides(factors_[i - 1], factors_[i]))
      throw PreconditionError("invariant factors must form a divisibility chain");
  }
}

FgGroup FgGroup::cyclic(const Integer& n) {
  Integer m = abs(n);
  if (m == 0) return free(1);
  if (m == 1) return trivial();
  return FgGroup(0, {m});
}

Integer FgGroup::generator_order(std::size_t i) const {
  if (i >= generator_count()) throw PreconditionError("generator index out of range");
  return i < factors_.size() ? factors_[i] : Integer(0);
}

Integer FgGroup::order() const {
  if (!is_finite()) throw PreconditionError("order of an infinite group");
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

Integer FgGroup::exponent() const {
  if (!is_finite()) return 0;
  return factors_.empty() ? Integer(1) : factors_.back();
}

IntMatrix FgGroup::relations() const {
  IntMatrix r(generator_count(), factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r(i, i) = factors_[i];
  return r;
}

std::string FgGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  const char* sep = "";
  for (const auto& d : factors_) {
    os << sep << "Z/" << d;
    sep = " + ";
  }
  if (free_rank_ == 1) {
    os << sep << "Z";
  } else if (free_rank_ > 1) {
    os << sep << "Z^" << free_rank_;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgGroup& g) {
  return os << g.to_string();
}

// ----------------------------------------------------------- GroupElement

IntVector normalize_coords(const FgGroup& g, IntVector coords) {
  if (coords.size() != g.generator_count())
    throw PreconditionError("element has " + std::to_string(coords.size()) +
                            " coordinates, group " + g.to_string() + " has " +
                            std::to_string(g.generator_count()) + " generators");
  for (std::size_t i = 0; i < g.torsion_rank(); ++i)
    coords[i] = mod(coords[i], g.invariant_factors()[i]);
  return coords;
}

GroupElement::GroupElement(FgGroup parent, IntVector coords)
    : parent_(std::move(parent)), coords_(normalize_coords(parent_, std::move(coords))) {}

GroupElement GroupElement::zero(const FgGroup& parent) {
  return GroupElement(parent, IntVector(parent.generator_count()));
}

GroupElement GroupElement::generator(const FgGroup& parent, std::size_t i) {
  IntVector c(parent.generator_count());
  c.at(i) = 1;
  return GroupElement(parent, std::move(c));
}

bool GroupElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Integer GroupElement::order() const {
  for (std::size_t i = parent_.torsion_rank(); i < coords_.size(); ++i)
    if (coords_[i] != 0) return 0;
  Integer n = 1;
  for (std::size_t i = 0; i < parent_.torsion_rank(); ++i) {
    const Integer& d = parent_.invariant_factors()[i];
    n = lcm(n, d / gcd(d, coords_[i]));
  }
  return n;
}

GroupElement GroupElement::operator-() const {
  IntVector c = coords_;
  for (auto& v : c) v = -v;
  return GroupElement(parent_, std::move(c));
}

namespace {
void require_same_parent(const GroupElement& a, const GroupElement& b) {
  if (a.parent() != b.parent())
    throw PreconditionError("elements of different groups: " +
                            a.parent().to_string() + " vs " + b.parent().to_string());
}
}  // namespace

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  require_same_parent(a, b);
  IntVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return GroupElement(a.parent_, std::move(c));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
  require_same_parent(a, b);
  IntVector c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return GroupElement(a.parent_, std::move(c));
}

GroupElement operator*(const Integer& k, const GroupElement& a) {
  IntVector c = a.coords_;
  for (auto& v : c) v *= k;
  return GroupElement(a.parent_, std::move(c));
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GroupElement& x) {
  return os << x.to_string();
}

// ----------------------------------------------------------- Homomorphism

Homomorphism::Homomorphism(FgGroup domain, FgGroup codomain, IntMatrix matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.generator_count() ||
      matrix_.cols() != domain_.generator_count()) {
    std::ostringstream os;
    os << "matrix shape " << matrix_.rows() << "x" << matrix_.cols()
       << " does not fit " << domain_ << " -> " << codomain_;
    throw PreconditionError(os.str());
  }
  const std::size_t tc = codomain_.torsion_rank();
  for (std::size_t j = 0; j < domain_.torsion_rank(); ++j) {
    const Integer& d = domain_.invariant_factors()[j];
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      const bool ok = i < tc ? divides(codomain_.invariant_factors()[i], d * matrix_(i, j))
                             : matrix_(i, j) == 0;
      if (!ok) {
        std::ostringstream os;
        os << "not well defined: generator " << j << " has order " << d
           << " but its image does not (" << domain_ << " -> " << codomain_ << ")";
        throw PreconditionError(os.str());
      }
    }
  }
  for (std::size_t i = 0; i < tc; ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j)
      matrix_(i, j) = mod(matrix_(i, j), codomain_.invariant_factors()[i]);
}

Homomorphism Homomorphism::identity(const FgGroup& a) {
  return Homomorphism(a, a, IntMatrix::identity(a.generator_count()));
}

Homomorphism Homomorphism::zero(const FgGroup& domain, const FgGroup& codomain) {
  return Homomorphism(domain, codomain,
                      IntMatrix(codomain.generator_count(), domain.generator_count()));
}

Homomorphism Homomorphism::scalar(const FgGroup& a, const Integer& k) {
  return Homomorphism(a, a, k * IntMatrix::identity(a.generator_count()));
}

Homomorphism Homomorphism::from_images(const FgGroup& domain, const FgGroup& codomain,
                                       const std::vector<GroupElement>& images) {
  if (images.size() != domain.generator_count())
    throw PreconditionError("need one image per domain generator");
  IntMatrix m(codomain.generator_count(), domain.generator_count());
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].parent() != codomain)
      throw PreconditionError("image does not lie in the codomain");
    m.set_column(j, images[j].coords());
  }
  return Homomorphism(domain, codomain, std::move(m));
}

GroupElement Homomorphism::operator()(const GroupElement& x) const {
  if (x.parent() != domain_)
    throw PreconditionError("element of " + x.parent().to_string() +
                            " applied to a map with domain " + domain_.to_string());
  return apply(x.coords());
}

GroupElement Homomorphism::apply(std::span<const Integer> coords) const {
  return GroupElement(codomain_, matrix_ * coords);
}

GroupElement Homomorphism::image_of_generator(std::size_t j) const {
  return GroupElement(codomain_, matrix_.column(j));
}

namespace {
void require_parallel(const Homomorphism& f, const Homomorphism& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw PreconditionError("maps have different domain or codomain");
}
}  // namespace

Homomorphism operator+(const Homomorphism& f, const Homomorphism& g) {
  require_parallel(f, g);
  return Homomorphism(f.domain_, f.codomain_, f.matrix_ + g.matrix_);
}

Homomorphism operator-(const Homomorphism& f, const Homomorphism& g) {
  require_parallel(f, g);
  return Homomorphism(f.domain_, f.codomain_, f.matrix_ - g.matrix_);
}

Homomorphism operator-(const Homomorphism& f) {
  return Homomorphism(f.domain_, f.codomain_, Integer(-1) * f.matrix_);
}

Homomorphism operator*(const Integer& k, const Homomorphism& f) {
  return Homomorphism(f.domain_, f.codomain_, k * f.matrix_);
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.codomain() != g.domain())
    throw PreconditionError("cannot compose: " + f.codomain().to_string() +
                            " is not " + g.domain().to_string());
  return Homomorphism(f.domain(), g.codomain(), g.matrix() * f.matrix());
}

std::ostream& operator<<(std::ostream& os, const Homomorphism& f) {
  return os << f.domain() << " -> " << f.codomain() << " " << f.matrix();
}

// --------------------------------------------------------- Classification

GroupElement Classification::image(std::span<const Integer> presentation_coords) const {
  return GroupElement(group, to_canonical * presentation_coords);
}

IntVector Classification::lift(const GroupElement& x) const {
  return from_canonical * std::span<const Integer>(x.coords());
}

Classification classify(const Presentation& p) {
  if (p.relations.rows() != p.generators)
    throw PreconditionError("relation matrix must have one row per generator");
  const std::size_t m = p.generators;
  SnfResult s = snf(p.relations);
  const std::size_t rank = s.rank();
  std::size_t ones = 0;
  while (ones < rank && s.invariant_factors[ones] == 1) ++ones;

  IntVector factors(s.invariant_factors.begin() + static_cast<std::ptrdiff_t>(ones),
                    s.invariant_factors.end());
  FgGroup group(m - rank, factors);
  IntMatrix to = s.u.block(ones, 0, m - ones, m);
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) to(i, j) = mod(to(i, j), factors[i]);
  IntMatrix from = s.u_inverse.block(0, ones, m, m - ones);
  return Classification{std::move(group), std::move(to), std::move(from)};
}

bool verify_classification(const Presentation& p, const Classification& c) {
  const std::size_t n = c.group.generator_count();
  IntMatrix round = c.to_canonical * c.from_canonical;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector col = normalize_coords(c.group, round.column(j));
    for (std::size_t i = 0; i < n; ++i)
      if (col[i] != (i == j ? 1 : 0)) return false;
  }
  IntMatrix back = c.from_canonical * c.to_canonical - IntMatrix::identity(p.generators);
  for (std::size_t j = 0; j < p.generators; ++j)
    if (!solve(p.relations, back.column(j))) return false;
  return true;
}

Classification classify_cyclic_sum(std::span<const Integer> orders) {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) continue;
    IntVector c(orders.size());
    c[i] = orders[i];
    cols.push_back(std::move(c));
  }
  return classify(Presentation{orders.size(), IntMatrix::from_columns(cols, orders.size())});
}

// ---------------------------------------------------- subgroups, quotients

Subgroup subgroup_generated(const FgGroup& ambient, const IntMatrix& generators) {
  const std::size_t n = ambient.generator_count();
  if (generators.rows() != n) throw PreconditionError("generator columns have the wrong length");
  const std::size_t k = generators.cols();
  IntMatrix syzygies = kernel_lattice(generators.hstack(ambient.relations()));
  IntMatrix rel(k, syzygies.rows());
  for (std::size_t r = 0; r < syzygies.rows(); ++r)
    for (std::size_t i = 0; i < k; ++i) rel(i, r) = syzygies(r, i);
  Classification c = classify(Presentation{k, std::move(rel)});
  IntMatrix incl = generators * c.from_canonical;
  return Subgroup{c.group, Homomorphism(c.group, ambient, std::move(incl))};
}

Quotient quotient(const FgGroup& ambient, const IntMatrix& generators) {
  const std::size_t n = ambient.generator_count();
  if (generators.rows() != n) throw PreconditionError("generator columns have the wrong length");
  Classification c = classify(Presentation{n, ambient.relations().hstack(generators)});
  return Quotient{c.group, Homomorphism(ambient, c.group, c.to_canonical), c.from_canonical};
}

Subgroup kernel(const Homomorphism& f) {
  const std::size_t na = f.domain().generator_count();
  IntMatrix k = kernel_lattice(f.matrix().hstack(f.codomain().relations()));
  IntMatrix gens(na, k.rows());
  for (std::size_t r = 0; r < k.rows(); ++r)
    for (std::size_t i = 0; i < na; ++i) gens(i, r) = k(r, i);
  return subgroup_generated(f.domain(), gens);
}

Subgroup image(const Homomorphism& f) {
  return subgroup_generated(f.codomain(), f.matrix());
}

Quotient cokernel(const Homomorphism& f) {
  return quotient(f.codomain(), f.matrix());
}

bool is_injective(const Homomorphism& f) { return kernel(f).group.is_trivial(); }
bool is_surjective(const Homomorphism& f) { return cokernel(f).group.is_trivial(); }
bool is_isomorphism(const Homomorphism& f) { return is_injective(f) && is_surjective(f); }

std::optional<GroupElement> preimage(const Homomorphism& f, const GroupElement& y) {
  if (y.parent() != f.codomain()) throw PreconditionError("element is not in the codomain");
  auto x = solve(f.matrix().hstack(f.codomain().relations()), y.coords());
  if (!x) return std::nullopt;
  x->resize(f.domain().generator_count());
  return GroupElement(f.domain(), std::move(*x));
}

Homomorphism inverse(const Homomorphism& iso) {
  if (!is_injective(iso)) throw PreconditionError("map is not injective, so has no inverse");
  std::vector<GroupElement> images;
  for (std::size_t j = 0; j < iso.codomain().generator_count(); ++j) {
    auto x = preimage(iso, GroupElement::generator(iso.codomain(), j));
    if (!x) throw PreconditionError("map is not surjective, so has no inverse");
    images.push_back(std::move(*x));
  }
  return Homomorphism::from_images(iso.codomain(), iso.domain(), images);
}

bool in_span(const FgGroup& ambient, const IntMatrix& generators, const GroupElement& y) {
  if (y.parent() != ambient) throw PreconditionError("element is not in the ambient group");
  return solve(generators.hstack(ambient.relations()), y.coords()).has_value();
}

bool same_subgroup(const FgGroup& ambient, const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!in_span(ambient, b, GroupElement(ambient, a.column(j)))) return false;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!in_span(ambient, a, GroupElement(ambient, b.column(j)))) return false;
  return true;
}

Homomorphism lift_through_injection(const Homomorphism& inclusion, const Homomorphism& g) {
  if (inclusion.codomain() != g.codomain())
    throw PreconditionError("lift: maps have different codomains");
  std::vector<GroupElement> images;
  for (std::size_t j = 0; j < g.domain().generator_count(); ++j) {
    auto x = preimage(inclusion, g.image_of_generator(j));
    if (!x) throw PreconditionError("lift: image is not contained in the subgroup");
    images.push_back(std::move(*x));
  }
  return Homomorphism::from_images(g.domain(), inclusion.domain(), images);
}

Homomorphism descend_through_surjection(const Homomorphism& projection, const Homomorphism& g) {
  if (projection.domain() != g.domain())
    throw PreconditionError("descend: maps have different domains");
  std::vector<GroupElement> images;
  for (std::size_t j = 0; j < projection.codomain().generator_count(); ++j) {
    auto x = preimage(projection, GroupElement::generator(projection.codomain(), j));
    if (!x) throw PreconditionError("descend: projection is not surjective");
    images.push_back(g(*x));
  }
  Homomorphism h = [&] {
    try {
      return Homomorphism::from_images(projection.codomain(), g.codomain(), images);
    } catch (const PreconditionError&) {
      throw PreconditionError("descend: map does not vanish on the kernel");
    }
  }();
  if (compose(h, projection) != g)
    throw PreconditionError("descend: map does not vanish on the kernel");
  return h;
}

// ------------------------------------------------------------- direct sums

Homomorphism DirectSum::copair(const std::vector<Homomorphism>& maps) const {
  if (maps.size() != projections.size()) throw PreconditionError("copair: wrong number of maps");
  if (maps.empty()) throw PreconditionError("copair: empty sum has no target");
  Homomorphism total = compose(maps[0], projections[0]);
  for (std::size_t k = 1; k < maps.size(); ++k) total = total + compose(maps[k], projections[k]);
  return total;
}

Homomorphism DirectSum::pair(const std::vector<Homomorphism>& maps) const {
  if (maps.size() != injections.size()) throw PreconditionError("pair: wrong number of maps");
  if (maps.empty()) throw PreconditionError("pair: empty sum has no source");
  Homomorphism total = compose(injections[0], maps[0]);
  for (std::size_t k = 1; k < maps.size(); ++k) total = total + compose(injections[k], maps[k]);
  return total;
}

DirectSum direct_sum(std::span<const FgGroup> summands) {
  IntVector orders;
  for (const auto& s : summands)
    for (std::size_t i = 0; i < s.generator_count(); ++i) orders.push_back(s.generator_order(i));
  Classification c = classify_cyclic_sum(orders);
  DirectSum out{c.group, {}, {}};
  std::size_t offset = 0;
  const std::size_t n = c.group.generator_count();
  for (const auto& s : summands) {
    const std::size_t k = s.generator_count();
    out.injections.emplace_back(s, c.group, c.to_canonical.block(0, offset, n, k));
    out.projections.emplace_back(c.group, s, c.from_canonical.block(offset, 0, k, n));
    offset += k;
  }
  return out;
}

DirectSum direct_sum(const FgGroup& a, const FgGroup& b) {
  const FgGroup parts[] = {a, b};
  return direct_sum(parts);
}

Subgroup subgroup_ann(const FgGroup& a, const Integer& n) {
  if (n < 1) throw PreconditionError("annihilator index must be positive");
  return kernel(Homomorphism::scalar(a, n));
}

Quotient quotient_by_n(const FgGroup& a, const Integer& n) {
  if (n < 1) throw PreconditionError("quotient index must be positive");
  return cokernel(Homomorphism::scalar(a, n));
}

Subgroup torsion_part(const FgGroup& a) {
  FgGroup t(0, a.invariant_factors());
  IntMatrix incl(a.generator_count(), t.generator_count());
  for (std::size_t i = 0; i < t.generator_count(); ++i) incl(i, i) = 1;
  return Subgroup{t, Homomorphism(t, a, std::move(incl))};
}

std::vector<GroupElement> elements(const FgGroup& a, std::size_t limit) {
  if (!a.is_finite()) throw PreconditionError("cannot enumerate an infinite group");
  if (a.order() > limit) throw PreconditionError("group too large to enumerate: " + a.to_string());
  std::vector<GroupElement> out;
  const std::size_t n = a.generator_count();
  IntVector c(n);
  for (;;) {
    out.emplace_back(a, c);
    std::size_t i = n;
    for (;;) {
      if (i == 0) return out;
      --i;
      c[i] += 1;
      if (c[i] < a.invariant_factors()[i]) break;
      c[i] = 0;
    }
  }
}

}  // namespace fgab
