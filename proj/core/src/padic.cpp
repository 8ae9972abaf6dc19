#include "fgab/padic.hpp"

#include "fgab/error.hpp"

#include <algorithm>
#include <sstream>

namespace fgab {

namespace {

void require_same_prime(const PadicInt& x, const PadicInt& y) {
  if (x.prime() != y.prime())
    throw PreconditionError("p-adic operands have different primes " + to_string(x.prime()) +
                            " and " + to_string(y.prime()));
}

}  // namespace

PadicInt::PadicInt(Integer p, unsigned long precision, const Integer& value)
    : p_(std::move(p)), k_(precision) {
  if (!is_prime(p_)) throw PreconditionError(to_string(p_) + " is not prime");
  if (k_ < 1) throw PreconditionError("p-adic precision must be at least 1");
  residue_ = mod(value, modulus());
}

PadicInt PadicInt::from_digits(const Integer& p, const std::vector<Integer>& digits) {
  if (digits.empty()) throw PreconditionError("at least one digit is required");
  Integer value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= p) throw PreconditionError("digit " + to_string(*it) + " out of range");
    value = value * p + *it;
  }
  return PadicInt(p, digits.size(), value);
}

PadicInt PadicInt::truncate(unsigned long precision) const {
  if (precision < 1 || precision > k_)
    throw PreconditionError("truncation precision must lie in [1, K]");
  return PadicInt(Reduced{}, p_, precision, mod(residue_, pow(p_, precision)));
}

std::vector<Integer> PadicInt::digits() const {
  std::vector<Integer> out;
  Integer r = residue_;
  for (unsigned long i = 0; i < k_; ++i) {
    Integer d;
    mpz_fdiv_qr(r.get_mpz_t(), d.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
    out.push_back(d);
  }
  return out;
}

PadicInt PadicInt::operator-() const {
  return PadicInt(Reduced{}, p_, k_, mod(-residue_, modulus()));
}

PadicInt operator+(const PadicInt& x, const PadicInt& y) {
  require_same_prime(x, y);
  const unsigned long k = std::min(x.k_, y.k_);
  return PadicInt(PadicInt::Reduced{}, x.p_, k, mod(x.residue_ + y.residue_, pow(x.p_, k)));
}

PadicInt operator-(const PadicInt& x, const PadicInt& y) {
  require_same_prime(x, y);
  const unsigned long k = std::min(x.k_, y.k_);
  return PadicInt(PadicInt::Reduced{}, x.p_, k, mod(x.residue_ - y.residue_, pow(x.p_, k)));
}

PadicInt operator*(const PadicInt& x, const PadicInt& y) {
  require_same_prime(x, y);
  const unsigned long k = std::min(x.k_, y.k_);
  return PadicInt(PadicInt::Reduced{}, x.p_, k, mod(x.residue_ * y.residue_, pow(x.p_, k)));
}

PadicValuation valuation(const PadicInt& x) {
  if (x.residue() == 0) return PadicValuation{true, x.precision()};
  return PadicValuation{false, valuation(x.residue(), x.prime())};
}

std::pair<unsigned long, PadicInt> unit_decompose(const PadicInt& x) {
  if (x.residue() == 0) throw PreconditionError("zero has no unit decomposition");
  const unsigned long e = valuation(x.residue(), x.prime());
  return {e, PadicInt(x.prime(), x.precision() - e, x.residue() / pow(x.prime(), e))};
}

PadicInt invert_unit(const PadicInt& x) {
  if (!x.is_unit()) throw PreconditionError(to_string(x.residue()) + " is not a unit");
  const Integer& p = x.prime();
  Integer y;
  mpz_invert(y.get_mpz_t(), Integer(mod(x.residue(), p)).get_mpz_t(), p.get_mpz_t());
  for (unsigned long prec = 1; prec < x.precision();) {
    prec = std::min(2 * prec, x.precision());
    const Integer m = pow(p, prec);
    y = mod(y * (2 - x.residue() * y), m);
  }
  return PadicInt(p, x.precision(), y);
}

PadicValuation distance_exponent(const PadicInt& x, const PadicInt& y) {
  return valuation(x - y);
}

// ------------------------------------------------------------- localization

bool PrimeSet::contains(const Integer& p) const {
  switch (kind) {
    case Kind::Finite: return primes.count(p) > 0;
    case Kind::AllExcept: return primes.count(p) == 0;
    case Kind::All: return true;
  }
  return false;
}

namespace {

std::string join_primes(const std::set<Integer>& ps, const char* sep) {
  std::string s;
  for (const auto& p : ps) {
    if (!s.empty()) s += sep;
    s += to_string(p);
  }
  return s;
}

PrimeSet normalized(PrimeSet s) {
  if (s.kind == PrimeSet::Kind::AllExcept && s.primes.empty()) return PrimeSet::all();
  if (s.kind == PrimeSet::Kind::All) s.primes.clear();
  return s;
}

PrimeSet join(const PrimeSet& x, const PrimeSet& y) {
  using K = PrimeSet::Kind;
  if (x.kind == K::All || y.kind == K::All) return PrimeSet::all();
  if (x.kind == K::Finite && y.kind == K::Finite) {
    std::set<Integer> u = x.primes;
    u.insert(y.primes.begin(), y.primes.end());
    return PrimeSet::finite(std::move(u));
  }
  if (x.kind == K::AllExcept && y.kind == K::AllExcept) {
    std::set<Integer> both;
    for (const auto& p : x.primes)
      if (y.primes.count(p)) both.insert(p);
    return normalized(PrimeSet::all_except(std::move(both)));
  }
  const PrimeSet& fin = x.kind == K::Finite ? x : y;
  const PrimeSet& co = x.kind == K::Finite ? y : x;
  std::set<Integer> rest;
  for (const auto& p : co.primes)
    if (!fin.primes.count(p)) rest.insert(p);
  return normalized(PrimeSet::all_except(std::move(rest)));
}

void require_primes(const PrimeSet& s) {
  for (const auto& p : s.primes)
    if (!is_prime(p)) throw PreconditionError(to_string(p) + " is not prime");
}

}  // namespace

std::string PrimeSet::to_string() const {
  switch (kind) {
    case Kind::Finite: return "{" + join_primes(primes, ",") + "}";
    case Kind::AllExcept: return "ALL-{" + join_primes(primes, ",") + "}";
    case Kind::All: return "ALL";
  }
  return "";
}

bool LocalizedGroup::finitely_generated() const {
  return rank == 0 || (inverted.kind == PrimeSet::Kind::Finite && inverted.primes.empty());
}

std::string LocalizedGroup::to_string() const {
  std::string free;
  switch (inverted.kind) {
    case PrimeSet::Kind::Finite:
      free = inverted.primes.empty() ? "Z" : "Z[1/" + join_primes(inverted.primes, ",1/") + "]";
      break;
    case PrimeSet::Kind::AllExcept:
      free = "Z_(" + join_primes(inverted.primes, ",") + ")";
      break;
    case PrimeSet::Kind::All:
      free = "Q";
      break;
  }
  std::string out;
  const FgGroup t = torsion_group();
  if (!t.is_trivial()) out = t.to_string();
  if (rank > 0) {
    if (!out.empty()) out += " + ";
    out += free;
    if (rank > 1) out += "^" + std::to_string(rank);
  }
  return out.empty() ? "0" : out;
}

LocalizedGroup localize(const FgGroup& a, const PrimeSet& s) {
  return localize(LocalizedGroup{PrimeSet::finite({}), a.free_rank(), primary_decomposition(a)}, s);
}

LocalizedGroup localize(const LocalizedGroup& a, const PrimeSet& s) {
  require_primes(s);
  LocalizedGroup out{join(a.inverted, normalized(s)), a.rank, {}};
  for (const auto& [p, es] : a.torsion)
    if (!out.inverted.contains(p)) out.torsion.emplace(p, es);
  return out;
}

// --------------------------------------------------------------- completion

std::string CompletedGroup::to_string() const {
  std::string out;
  if (!finite_part.is_trivial()) out = finite_part.to_string();
  if (zp_rank > 0) {
    if (!out.empty()) out += " + ";
    out += "Z_" + fgab::to_string(p);
    if (zp_rank > 1) out += "^" + std::to_string(zp_rank);
  }
  return out.empty() ? "0" : out;
}

CompletedGroup complete(const FgGroup& a, const Integer& p) {
  return CompletedGroup{p, a.free_rank(), p_primary_part(a, p)};
}

FgGroup mod_pk(const CompletedGroup& g, unsigned long k) {
  const Integer pk = pow(g.p, k);
  IntVector orders(g.zp_rank, pk);
  for (const auto& d : g.finite_part.invariant_factors()) orders.push_back(gcd(d, pk));
  return classify_cyclic_sum(orders).group;
}

DerivedCompletion derived_completion(const FgGroup& a, const Integer& p) {
  return DerivedCompletion{complete(a, p), FgGroup::trivial()};
}

}  // namespace fgab
