#include "fgab/integer.hpp"

#include "fgab/error.hpp"

#include <algorithm>
#include <cctype>

namespace fgab {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer xgcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return g;
}

Integer mod(const Integer& a, const Integer& modulus) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

unsigned long valuation(const Integer& a, const Integer& p) {
  if (a == 0) throw PreconditionError("valuation of zero is infinite");
  Integer rest = abs(a);
  unsigned long e = 0;
  while (divides(p, rest)) {
    rest /= p;
    ++e;
  }
  return e;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (divides(2, n)) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Integer, unsigned long> factorize(const Integer& n) {
  if (n == 0) throw PreconditionError("cannot factor zero");
  std::map<Integer, unsigned long> out;
  Integer rest = abs(n);
  for (unsigned long p = 2; p < 1000 && rest > 1; ++p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++out[Integer(p)];
    }
  }
  factor_into(rest, out);
  return out;
}

std::string to_string(const Integer& a) { return a.get_str(); }

Integer parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw InputError("not an integer: '" + text + "'");
  }
  Integer value(text[0] == '+' ? text.substr(1) : text, 10);
  return value;
}

}  // namespace fgab
