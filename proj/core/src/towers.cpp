#include "fgab/towers.hpp"

#include "fgab/error.hpp"

#include <algorithm>

namespace fgab {

// --------------------------------------------------------------- reindexing

std::size_t Reindexing::operator()(std::size_t j) const {
  if (j < values.size()) return values[j];
  return values.back() + step * (j - values.size() + 1);
}

void Reindexing::validate() const {
  if (values.empty()) throw PreconditionError("reindexing needs at least one value");
  if (step < 1) throw PreconditionError("reindexing step must be at least 1");
  for (std::size_t j = 1; j < values.size(); ++j)
    if (values[j] < values[j - 1]) throw PreconditionError("reindexing must be nondecreasing");
}

namespace {

// First index j >= values.size() - 1 from which u has reached `n`.
std::size_t settle_index(const Reindexing& u, std::size_t n) {
  std::size_t j = u.values.size() - 1;
  while (u(j) < n) ++j;
  return j;
}

Homomorphism power(const Homomorphism& h, std::size_t m) {
  Homomorphism out = Homomorphism::identity(h.domain());
  for (std::size_t i = 0; i < m; ++i) out = compose(h, out);
  return out;
}

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw PreconditionError(to_string(p) + " is not prime");
}

}  // namespace

// -------------------------------------------------------------------- tower

Tower::Tower(std::vector<FgGroup> prefix, std::vector<Homomorphism> maps, TowerTail tail)
    : prefix_(std::move(prefix)), maps_(std::move(maps)), tail_(std::move(tail)) {
  if (generated()) {
    if (!prefix_.empty() || !maps_.empty())
      throw PreconditionError("generated towers take no explicit prefix");
    require_prime(tail_.p);
    return;
  }
  if (prefix_.empty()) throw PreconditionError("tower prefix must contain a group");
  if (maps_.size() + 1 != prefix_.size())
    throw PreconditionError("tower needs one map per consecutive pair of prefix groups");
  for (std::size_t k = 0; k < maps_.size(); ++k)
    if (maps_[k].domain() != prefix_[k + 1] || maps_[k].codomain() != prefix_[k])
      throw PreconditionError("tower map " + std::to_string(k) + " must go from A_" +
                              std::to_string(k + 1) + " to A_" + std::to_string(k));
  if (tail_.kind == TailKind::EndoIterate) {
    if (!tail_.endo) throw PreconditionError("iterated tail needs an endomorphism");
    if (tail_.endo->domain() != prefix_.back() || tail_.endo->codomain() != prefix_.back())
      throw PreconditionError("tail endomorphism must act on the last prefix group");
  }
}

bool Tower::generated() const {
  return tail_.kind == TailKind::PCompletion || tail_.kind == TailKind::PTorsion;
}

Homomorphism Tower::tail_endomorphism() const {
  const FgGroup& a = prefix_.back();
  switch (tail_.kind) {
    case TailKind::ConstantIdentity: return Homomorphism::identity(a);
    case TailKind::ZeroMaps: return Homomorphism::zero(a, a);
    case TailKind::EndoIterate: return *tail_.endo;
    default: throw PreconditionError("generated towers have no tail endomorphism");
  }
}

FgGroup Tower::group(std::size_t k) const {
  switch (tail_.kind) {
    case TailKind::PCompletion: return quotient_by_n(tail_.base, pow(tail_.p, k)).group;
    case TailKind::PTorsion: return subgroup_ann(tail_.base, pow(tail_.p, k)).group;
    default: return k < prefix_.size() ? prefix_[k] : prefix_.back();
  }
}

Homomorphism Tower::map(std::size_t k) const {
  switch (tail_.kind) {
    case TailKind::PCompletion: {
      Quotient upper = quotient_by_n(tail_.base, pow(tail_.p, k + 1));
      Quotient lower = quotient_by_n(tail_.base, pow(tail_.p, k));
      return descend_through_surjection(upper.projection, lower.projection);
    }
    case TailKind::PTorsion: {
      Subgroup upper = subgroup_ann(tail_.base, pow(tail_.p, k + 1));
      Subgroup lower = subgroup_ann(tail_.base, pow(tail_.p, k));
      return lift_through_injection(lower.inclusion, tail_.p * upper.inclusion);
    }
    default: return k < maps_.size() ? maps_[k] : tail_endomorphism();
  }
}

Homomorphism Tower::composite(std::size_t k, std::size_t i) const {
  if (i > k) throw PreconditionError("tower composites go downwards");
  Homomorphism out = Homomorphism::identity(group(k));
  for (std::size_t m = k; m-- > i;) out = compose(map(m), out);
  return out;
}

Tower Tower::reindex(const Reindexing& u) const {
  u.validate();
  if (generated()) throw PreconditionError("reindexing supports prefix towers only");
  const std::size_t stop = settle_index(u, last_prefix_index());
  std::vector<FgGroup> groups;
  std::vector<Homomorphism> maps;
  for (std::size_t j = 0; j <= stop; ++j) groups.push_back(group(u(j)));
  for (std::size_t j = 0; j < stop; ++j) maps.push_back(composite(u(j + 1), u(j)));
  TowerTail tail = tail_;
  if (tail.kind == TailKind::EndoIterate) tail.endo = power(*tail.endo, u.step);
  return Tower(std::move(groups), std::move(maps), std::move(tail));
}

// -------------------------------------------------------- Mittag-Leffler

std::size_t MlCertificate::index(std::size_t i) const {
  return i < tail_start ? stabilization.at(i) : i + tail_offset;
}

namespace {

// Image chain of h^m in A; stable once two consecutive terms agree.
struct ImageChain {
  std::vector<Subgroup> terms;  // terms[m] = im h^m
  std::optional<std::size_t> stable;
};

ImageChain image_chain(const Homomorphism& h, std::size_t bound) {
  ImageChain c;
  c.terms.push_back(image(Homomorphism::identity(h.domain())));
  for (std::size_t m = 0; m <= bound; ++m) {
    c.terms.push_back(image(compose(h, c.terms[m].inclusion)));
    if (same_subgroup(h.domain(), c.terms[m].inclusion.matrix(),
                      c.terms[m + 1].inclusion.matrix())) {
      c.stable = m;
      c.terms.pop_back();
      break;
    }
  }
  return c;
}

bool same_image(const Homomorphism& f, const Homomorphism& g) {
  return same_subgroup(f.codomain(), f.matrix(), g.matrix());
}

MlCertificate prefix_certificate(const Tower& t, const ImageChain& chain) {
  MlCertificate ml;
  const std::size_t n = t.last_prefix_index();
  const std::size_t m0 = *chain.stable;
  ml.tail_start = n;
  ml.tail_offset = m0;
  for (std::size_t i = 0; i < n; ++i) {
    const Homomorphism down = t.composite(n, i);
    const Homomorphism stable = compose(down, chain.terms[m0].inclusion);
    std::size_t j = i;
    for (;; ++j) {
      const Homomorphism from_j = j <= n ? t.composite(j, i)
                                         : compose(down, chain.terms[j - n].inclusion);
      if (same_image(from_j, stable)) break;
    }
    ml.stabilization.push_back(j);
  }
  ml.trace = "image of the tail map stabilizes after " + std::to_string(m0) + " steps";
  return ml;
}

unsigned long p_exponent(const FgGroup& a, const Integer& p) {
  unsigned long e = 0;
  for (const auto& d : a.invariant_factors())
    if (divides(p, d)) e = std::max(e, valuation(d, p));
  return e;
}

}  // namespace

MlCertificate is_mittag_leffler(const Tower& t, std::size_t bound) {
  MlCertificate ml;
  if (t.tail().kind == TailKind::PCompletion) {
    ml.trace = "all maps are surjective";
    return ml;
  }
  if (t.tail().kind == TailKind::PTorsion) {
    const unsigned long e = p_exponent(t.tail().base, t.tail().p);
    ml.tail_start = e;
    ml.tail_offset = e;
    for (std::size_t i = 0; i < e; ++i) {
      std::size_t j = i;
      while (!image(t.composite(j, i)).group.is_trivial()) ++j;
      ml.stabilization.push_back(j);
    }
    ml.trace = "p^" + std::to_string(e) + " kills the p-torsion, so images vanish";
    return ml;
  }
  ImageChain chain = image_chain(t.tail_endomorphism(), bound);
  if (!chain.stable) {
    ml.determined = false;
    ml.trace = "image chain of the tail map still strictly decreasing after " +
               std::to_string(bound) + " steps";
    return ml;
  }
  return prefix_certificate(t, chain);
}

// --------------------------------------------------------------------- lim

std::string LimValue::to_string() const {
  switch (kind) {
    case Kind::Group: return group.to_string();
    case Kind::Completed: return completed->to_string();
    case Kind::Undetermined: return "UNDETERMINED";
  }
  return "";
}

namespace {

// lim of the constant tower on the stable image E of h: E with h|E invertible.
void anchor_on_stable_image(LimResult& r, const Subgroup& e, const Homomorphism& h) {
  const Homomorphism restricted = lift_through_injection(e.inclusion, compose(h, e.inclusion));
  r.lim.kind = LimValue::Kind::Group;
  r.lim.group = e.group;
  r.anchor = e.inclusion;
  r.shift = inverse(restricted);
}

std::optional<Integer> scalar_of(const Homomorphism& h) {
  const FgGroup& a = h.domain();
  if (a.is_trivial()) return Integer(0);
  const std::size_t last = a.generator_count() - 1;
  const Integer m = h.matrix()(last, last);
  if (Homomorphism::scalar(a, m) == h) return m;
  return std::nullopt;
}

}  // namespace

LimResult lim(const Tower& t, std::size_t bound) {
  LimResult r;
  r.ml = is_mittag_leffler(t, bound);
  switch (t.tail().kind) {
    case TailKind::PCompletion:
      r.lim.kind = LimValue::Kind::Completed;
      r.lim.completed = complete(t.tail().base, t.tail().p);
      r.lim1.note = "surjective tower";
      return r;
    case TailKind::PTorsion:
      r.lim.group = FgGroup::trivial();
      r.lim1.note = "nilpotent tower: composites of " + std::to_string(r.ml.tail_offset) +
                    " consecutive maps vanish";
      return r;
    default: break;
  }
  const Homomorphism h = t.tail_endomorphism();
  if (r.ml.determined) {
    ImageChain chain = image_chain(h, bound);
    anchor_on_stable_image(r, chain.terms[*chain.stable], h);
    r.lim1.note = "Mittag-Leffler: " + r.ml.trace;
    return r;
  }
  r.lim1.zero = false;
  r.lim1.note = r.ml.trace + "; lim^1 is not computed";
  // Multiplication by m, |m| >= 2: coherent sequences have m-divisible free
  // part, hence live in the torsion subgroup, where the chain is finite.
  if (auto m = scalar_of(h); m && abs(*m) >= 2) {
    const Subgroup tors = torsion_part(h.domain());
    const Homomorphism ht = Homomorphism::scalar(tors.group, *m);
    ImageChain chain = image_chain(ht, bound);
    if (chain.stable) {
      const Subgroup& e = chain.terms[*chain.stable];
      anchor_on_stable_image(r, Subgroup{e.group, compose(tors.inclusion, e.inclusion)}, h);
      r.shift = inverse(lift_through_injection(e.inclusion, compose(ht, e.inclusion)));
      return r;
    }
  }
  r.lim.kind = LimValue::Kind::Undetermined;
  r.lim.reason = "images of the tail map do not stabilize and the map is not a scalar";
  return r;
}

Homomorphism lim_projection(const Tower& t, const LimResult& r, std::size_t k) {
  if (r.lim.kind != LimValue::Kind::Group)
    throw PreconditionError("limit is not a finitely generated group");
  if (r.lim.group.is_trivial()) return Homomorphism::zero(r.lim.group, t.group(k));
  if (!r.anchor || !r.shift) throw PreconditionError("limit has no level projections");
  const std::size_t n = t.last_prefix_index();
  if (k <= n) return compose(t.composite(n, k), *r.anchor);
  return compose(*r.anchor, power(*r.shift, k - n));
}

// ------------------------------------------------------ exactness of lim

bool LimExactReport::all_computable_exact() const {
  return std::none_of(segments.begin(), segments.end(),
                      [](const LimSegment& s) { return s.status == SegmentStatus::Failed; });
}

namespace {

std::size_t anchor_level(const Tower& t) { return t.generated() ? 0 : t.last_prefix_index(); }

bool is_group(const LimResult& r) { return r.lim.kind == LimValue::Kind::Group; }

LimSegment from_check(std::string node, const ExactnessCheck& c) {
  if (c) return {std::move(node), SegmentStatus::Verified, "checked on the limit groups"};
  std::string detail = c.reason;
  if (c.witness) detail += ", witness " + c.witness->to_string();
  return {std::move(node), SegmentStatus::Failed, detail};
}

}  // namespace

LimExactReport lim_exact_check(const Tower& a, const Tower& b, const Tower& c,
                               const LevelwiseMaps& maps, std::size_t window,
                               std::size_t bound) {
  LimExactReport rep;
  rep.window = window;
  std::optional<std::pair<Homomorphism, Homomorphism>> above;
  for (std::size_t k = window; k-- > 0;) {
    auto level = maps(k);
    if (level.first.domain() != a.group(k) || level.first.codomain() != b.group(k) ||
        level.second.codomain() != c.group(k))
      throw PreconditionError("levelwise maps at level " + std::to_string(k) +
                              " do not connect the towers");
    try {
      ShortExactSeq(level.first, level.second);
    } catch (const PreconditionError& e) {
      throw PreconditionError("level " + std::to_string(k) + ": " + e.what());
    }
    if (above) {
      if (compose(level.first, a.map(k)) != compose(b.map(k), above->first) ||
          compose(level.second, b.map(k)) != compose(c.map(k), above->second))
        throw PreconditionError("levelwise maps do not commute with the tower maps at level " +
                                std::to_string(k));
    }
    above = std::move(level);
  }

  rep.a = lim(a, bound);
  rep.b = lim(b, bound);
  rep.c = lim(c, bound);
  const std::string window_note =
      "levelwise exact for k < " + std::to_string(window) + "; limit map not representable";

  std::optional<Homomorphism> phi, psi;
  if (is_group(rep.a) && is_group(rep.b) && is_group(rep.c)) {
    const std::size_t k = std::max({anchor_level(a), anchor_level(b), anchor_level(c)});
    auto level = maps(k);
    const Homomorphism pa = lim_projection(a, rep.a, k);
    const Homomorphism pb = lim_projection(b, rep.b, k);
    const Homomorphism pc = lim_projection(c, rep.c, k);
    phi = lift_through_injection(pb, compose(level.first, pa));
    psi = lift_through_injection(pc, compose(level.second, pb));
  }

  auto& segs = rep.segments;
  if (is_group(rep.a) && rep.a.lim.group.is_trivial())
    segs.push_back({"lim A", SegmentStatus::Verified, "lim A = 0"});
  else if (phi)
    segs.push_back(from_check("lim A", check_injective(*phi)));
  else
    segs.push_back({"lim A", SegmentStatus::Window, window_note});

  if (phi && psi)
    segs.push_back(from_check("lim B", is_exact_at(*phi, *psi)));
  else if (is_group(rep.b) && rep.b.lim.group.is_trivial())
    segs.push_back({"lim B", SegmentStatus::Verified, "lim B = 0"});
  else if (is_group(rep.b) && window > 0) {
    // ker(lim B -> lim C) is the intersection of the level kernels, which
    // shrink with k; report the image at the deepest level of the window.
    const std::size_t k = std::max(window - 1, anchor_level(b));
    const Subgroup im = image(compose(maps(k).second, lim_projection(b, rep.b, k)));
    segs.push_back({"lim B", SegmentStatus::Window,
                    window_note + "; image of lim B in C_" + std::to_string(k) + " is " +
                        im.group.to_string()});
  } else
    segs.push_back({"lim B", SegmentStatus::Window, window_note});

  if (!rep.a.lim1.zero)
    segs.push_back({"lim C", SegmentStatus::Undetermined, "lim^1 A: " + rep.a.lim1.note});
  else if (psi)
    segs.push_back(from_check("lim C", check_surjective(*psi)));
  else
    segs.push_back({"lim C", SegmentStatus::Window, window_note});

  auto lim1_node = [&](const char* node, const LimResult& r, const LimResult* prev) {
    if (!r.lim1.zero)
      return LimSegment{node, SegmentStatus::Undetermined, r.lim1.note};
    if (prev && !prev->lim1.zero)
      return LimSegment{node, SegmentStatus::Undetermined, prev->lim1.note};
    return LimSegment{node, SegmentStatus::Verified, "lim^1 vanishes: " + r.lim1.note};
  };
  segs.push_back(lim1_node("lim^1 A", rep.a, nullptr));
  segs.push_back(lim1_node("lim^1 B", rep.b, &rep.a));
  segs.push_back(lim1_node("lim^1 C", rep.c, &rep.b));
  return rep;
}

// ----------------------------------------------------------------- colim

std::string SymbolicGroup::to_string() const {
  switch (kind) {
    case Kind::Group: return group.to_string();
    case Kind::PAdic: return "Z_" + fgab::to_string(p);
    case Kind::Prufer: return "Z/" + fgab::to_string(p) + "^inf";
    case Kind::Localized: return localized->to_string();
  }
  return "";
}

namespace {

// e with a = Z/p^e, or nullopt when a is not a cyclic p-group.
std::optional<unsigned long> cyclic_p_exponent(const FgGroup& a, const Integer& p) {
  if (a.free_rank() != 0 || a.torsion_rank() > 1) return std::nullopt;
  if (a.is_trivial()) return 0;
  const Integer& d = a.invariant_factors()[0];
  const unsigned long e = valuation(d, p);
  if (pow(p, e) != d) return std::nullopt;
  return e;
}

}  // namespace

ColimSequence::ColimSequence(std::vector<FgGroup> prefix, std::vector<Homomorphism> maps,
                             ColimTail tail)
    : prefix_(std::move(prefix)), maps_(std::move(maps)), tail_(std::move(tail)) {
  if (prefix_.empty()) throw PreconditionError("sequence prefix must contain a group");
  if (maps_.size() + 1 != prefix_.size())
    throw PreconditionError("sequence needs one map per consecutive pair of prefix groups");
  for (std::size_t k = 0; k < maps_.size(); ++k)
    if (maps_[k].domain() != prefix_[k] || maps_[k].codomain() != prefix_[k + 1])
      throw PreconditionError("sequence map " + std::to_string(k) + " must go from A_" +
                              std::to_string(k) + " to A_" + std::to_string(k + 1));
  switch (tail_.kind) {
    case ColimTailKind::EventuallyIdentity: break;
    case ColimTailKind::EndoIterate:
      if (!tail_.endo || tail_.endo->domain() != prefix_.back() ||
          tail_.endo->codomain() != prefix_.back())
        throw PreconditionError("tail endomorphism must act on the last prefix group");
      break;
    case ColimTailKind::StandardInjections:
      require_prime(tail_.p);
      if (tail_.step < 1) throw PreconditionError("injection step must be at least 1");
      if (!cyclic_p_exponent(prefix_.back(), tail_.p))
        throw PreconditionError("standard injections start from a cyclic " +
                                to_string(tail_.p) + "-group");
      break;
  }
}

FgGroup ColimSequence::group(std::size_t k) const {
  if (k < prefix_.size()) return prefix_[k];
  if (tail_.kind != ColimTailKind::StandardInjections) return prefix_.back();
  const unsigned long e = *cyclic_p_exponent(prefix_.back(), tail_.p);
  return FgGroup::cyclic(pow(tail_.p, e + tail_.step * (k - last_prefix_index())));
}

Homomorphism ColimSequence::map(std::size_t k) const {
  if (k < maps_.size()) return maps_[k];
  const FgGroup a = group(k);
  switch (tail_.kind) {
    case ColimTailKind::EventuallyIdentity: return Homomorphism::identity(a);
    case ColimTailKind::EndoIterate: return *tail_.endo;
    case ColimTailKind::StandardInjections: {
      const FgGroup next = group(k + 1);
      IntMatrix m(1, a.generator_count());
      if (!a.is_trivial()) m(0, 0) = pow(tail_.p, tail_.step);
      return Homomorphism(a, next, std::move(m));
    }
  }
  throw PreconditionError("unknown sequence tail");
}

ColimSequence ColimSequence::reindex(const Reindexing& u) const {
  u.validate();
  const std::size_t stop = settle_index(u, last_prefix_index());
  std::vector<FgGroup> groups;
  std::vector<Homomorphism> maps;
  for (std::size_t j = 0; j <= stop; ++j) groups.push_back(group(u(j)));
  for (std::size_t j = 0; j < stop; ++j) {
    Homomorphism m = Homomorphism::identity(group(u(j)));
    for (std::size_t k = u(j); k < u(j + 1); ++k) m = compose(map(k), m);
    maps.push_back(std::move(m));
  }
  ColimTail tail = tail_;
  if (tail.kind == ColimTailKind::EndoIterate) tail.endo = power(*tail.endo, u.step);
  if (tail.kind == ColimTailKind::StandardInjections) tail.step *= u.step;
  return ColimSequence(std::move(groups), std::move(maps), std::move(tail));
}

SymbolicGroup colim_pattern(const ColimSequence& s) {
  SymbolicGroup out;
  const FgGroup last = s.group(s.last_prefix_index());
  switch (s.tail().kind) {
    case ColimTailKind::EventuallyIdentity:
      out.group = last;
      return out;
    case ColimTailKind::StandardInjections:
      out.kind = SymbolicGroup::Kind::Prufer;
      out.p = s.tail().p;
      return out;
    case ColimTailKind::EndoIterate: break;
  }
  const Homomorphism& h = *s.tail().endo;
  if (is_isomorphism(h)) {
    out.group = last;
    return out;
  }
  auto m = scalar_of(h);
  if (!m || *m == 0)
    throw PreconditionError(
        "unrecognized colimit pattern: tail map is neither an isomorphism nor "
        "multiplication by a nonzero integer");
  std::set<Integer> primes;
  for (const auto& [p, e] : factorize(*m)) primes.insert(p);
  LocalizedGroup l = localize(last, PrimeSet::finite(std::move(primes)));
  if (l.finitely_generated()) {
    out.group = l.torsion_group();
    return out;
  }
  out.kind = SymbolicGroup::Kind::Localized;
  out.localized = std::move(l);
  return out;
}

}  // namespace fgab
