#include "fgab_cli/json_io.hpp"

#include "fgab/error.hpp"
#include "fgab_cli/expr.hpp"

#include <limits>

namespace fgab::cli {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& array_field(const json& v, const std::string& path) {
  if (!v.is_array()) schema_error(path, "expected an array");
  return v;
}

std::string kind_field(const json& tail, const std::string& path) {
  const json& k = field(tail, "kind", path);
  if (!k.is_string()) schema_error(path + ".kind", "expected a string");
  return k.get<std::string>();
}

}  // namespace

const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field '" + key + "'");
  return *it;
}

bool has_field(const json& obj, const std::string& key) {
  return obj.is_object() && obj.contains(key);
}

Integer integer_from_json(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()), 10);
    return Integer(std::to_string(v.get<std::int64_t>()), 10);
  }
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const InputError& e) {
      schema_error(path, e.what());
    }
  }
  schema_error(path, "expected an integer");
}

unsigned long count_from_json(const json& v, const std::string& path) {
  const Integer n = integer_from_json(v, path);
  if (n < 0 || !n.fits_ulong_p()) schema_error(path, "expected a nonnegative count");
  return n.get_ui();
}

IntVector vector_from_json(const json& v, const std::string& path) {
  IntVector out;
  for (std::size_t i = 0; i < array_field(v, path).size(); ++i)
    out.push_back(integer_from_json(v[i], item(path, i)));
  return out;
}

FgGroup group_from_json(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_group(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what(), e.position());
    }
  }
  if (!v.is_object()) schema_error(path, "expected a group expression or {rank, factors}");
  const unsigned long rank = count_from_json(field(v, "rank", path), path + ".rank");
  IntVector orders = vector_from_json(field(v, "factors", path), path + ".factors");
  for (std::size_t i = 0; i < orders.size(); ++i)
    if (orders[i] < 1) schema_error(item(path + ".factors", i), "factors must be positive");
  orders.insert(orders.end(), rank, Integer(0));
  return classify_cyclic_sum(orders).group;
}

Homomorphism hom_from_json(const json& v, const std::string& path) {
  FgGroup dom = group_from_json(field(v, "domain", path), path + ".domain");
  FgGroup cod = group_from_json(field(v, "codomain", path), path + ".codomain");
  const std::string mpath = path + ".matrix";
  const json& rows = array_field(field(v, "matrix", path), mpath);
  const std::size_t m = cod.generator_count(), n = dom.generator_count();
  IntMatrix mat(m, n);
  // An empty matrix stands for any shape with a zero dimension.
  if (!(rows.empty() && (m == 0 || n == 0))) {
    if (rows.size() != m)
      schema_error(mpath, "expected " + std::to_string(m) + " rows (codomain generators), got " +
                              std::to_string(rows.size()));
    for (std::size_t i = 0; i < m; ++i) {
      const IntVector row = vector_from_json(rows[i], item(mpath, i));
      if (row.size() != n)
        schema_error(item(mpath, i), "expected " + std::to_string(n) +
                                         " entries (domain generators), got " +
                                         std::to_string(row.size()));
      for (std::size_t j = 0; j < n; ++j) mat(i, j) = row[j];
    }
  }
  return Homomorphism(std::move(dom), std::move(cod), std::move(mat));
}

ShortExactSeq ses_from_json(const json& v, const std::string& path) {
  Homomorphism j = hom_from_json(field(v, "j", path), path + ".j");
  Homomorphism q = hom_from_json(field(v, "q", path), path + ".q");
  return ShortExactSeq(std::move(j), std::move(q));
}

std::vector<Homomorphism> homs_from_json(const json& v, const std::string& path) {
  std::vector<Homomorphism> out;
  for (std::size_t i = 0; i < array_field(v, path).size(); ++i)
    out.push_back(hom_from_json(v[i], item(path, i)));
  return out;
}

namespace {

std::set<Integer> prime_list(const json& v, const std::string& path) {
  std::set<Integer> out;
  for (std::size_t i = 0; i < array_field(v, path).size(); ++i) {
    Integer p = integer_from_json(v[i], item(path, i));
    if (!is_prime(p)) throw PreconditionError(item(path, i) + ": " + to_string(p) + " is not prime");
    out.insert(std::move(p));
  }
  return out;
}

}  // namespace

PrimeSet primes_from_json(const json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "all") return PrimeSet::all();
  if (v.is_array()) return PrimeSet::finite(prime_list(v, path));
  if (v.is_object()) return PrimeSet::all_except(prime_list(field(v, "all_except", path), path + ".all_except"));
  schema_error(path, "expected \"all\", a list of primes or {\"all_except\": [...]}");
}

Tower tower_from_json(const json& v, const std::string& path) {
  const std::string tpath = path + ".tail";
  const json& tail = field(v, "tail", path);
  const std::string kind = kind_field(tail, tpath);
  std::vector<FgGroup> prefix;
  if (has_field(v, "prefix")) {
    const json& p = array_field(v["prefix"], path + ".prefix");
    for (std::size_t i = 0; i < p.size(); ++i)
      prefix.push_back(group_from_json(p[i], item(path + ".prefix", i)));
  }
  std::vector<Homomorphism> maps;
  if (has_field(v, "maps")) maps = homs_from_json(v["maps"], path + ".maps");

  TowerTail t;
  if (kind == "CONSTANT_IDENTITY") {
    t = TowerTail::constant_identity();
  } else if (kind == "ZERO_MAPS") {
    t = TowerTail::zero_maps();
  } else if (kind == "ENDO_ITERATE") {
    t = TowerTail::endo_iterate(hom_from_json(field(tail, "endo", tpath), tpath + ".endo"));
  } else if (kind == "PCOMPLETION" || kind == "PTORSION") {
    FgGroup a = group_from_json(field(tail, "group", tpath), tpath + ".group");
    Integer p = integer_from_json(field(tail, "p", tpath), tpath + ".p");
    t = kind == "PCOMPLETION" ? TowerTail::pcompletion(std::move(a), std::move(p))
                              : TowerTail::ptorsion(std::move(a), std::move(p));
  } else {
    schema_error(tpath + ".kind", "unknown tail kind '" + kind + "'");
  }
  return Tower(std::move(prefix), std::move(maps), std::move(t));
}

ColimSequence colim_from_json(const json& v, const std::string& path) {
  const std::string tpath = path + ".tail";
  const json& tail = field(v, "tail", path);
  const std::string kind = kind_field(tail, tpath);
  std::vector<FgGroup> prefix;
  const json& p = array_field(field(v, "prefix", path), path + ".prefix");
  for (std::size_t i = 0; i < p.size(); ++i)
    prefix.push_back(group_from_json(p[i], item(path + ".prefix", i)));
  std::vector<Homomorphism> maps;
  if (has_field(v, "maps")) maps = homs_from_json(v["maps"], path + ".maps");

  ColimTail t;
  if (kind == "EVENTUALLY_IDENTITY") {
    t.kind = ColimTailKind::EventuallyIdentity;
  } else if (kind == "ENDO_ITERATE") {
    t.kind = ColimTailKind::EndoIterate;
    t.endo = hom_from_json(field(tail, "endo", tpath), tpath + ".endo");
  } else if (kind == "MULT_BY_N") {
    if (prefix.empty()) schema_error(path + ".prefix", "expected at least one group");
    t.kind = ColimTailKind::EndoIterate;
    t.endo = Homomorphism::scalar(prefix.back(),
                                  integer_from_json(field(tail, "n", tpath), tpath + ".n"));
  } else if (kind == "STANDARD_INJECTIONS") {
    t.kind = ColimTailKind::StandardInjections;
    t.p = integer_from_json(field(tail, "p", tpath), tpath + ".p");
    if (has_field(tail, "step")) t.step = count_from_json(tail["step"], tpath + ".step");
  } else {
    schema_error(tpath + ".kind", "unknown tail kind '" + kind + "'");
  }
  return ColimSequence(std::move(prefix), std::move(maps), std::move(t));
}

// ---------------------------------------------------------------- writers

json to_json(const Integer& a) {
  if (a.fits_slong_p()) return json(static_cast<std::int64_t>(a.get_si()));
  return json(to_string(a));
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const FgGroup& g) {
  return json{{"rank", g.free_rank()}, {"factors", to_json(g.invariant_factors())}};
}

json to_json(const GroupElement& x) { return to_json(x.coords()); }

json to_json(const Homomorphism& f) {
  json rows = json::array();
  for (std::size_t i = 0; i < f.matrix().rows(); ++i) rows.push_back(to_json(f.matrix().row(i)));
  return json{{"domain", to_json(f.domain())},
              {"codomain", to_json(f.codomain())},
              {"matrix", std::move(rows)}};
}

json to_json(const ShortExactSeq& e) {
  return json{{"j", to_json(e.j())}, {"q", to_json(e.q())}};
}

json to_json(const LocalizedGroup& g) {
  json inverted;
  switch (g.inverted.kind) {
    case PrimeSet::Kind::All: inverted = "all"; break;
    case PrimeSet::Kind::Finite:
      inverted = to_json(IntVector(g.inverted.primes.begin(), g.inverted.primes.end()));
      break;
    case PrimeSet::Kind::AllExcept:
      inverted = json{{"all_except", to_json(IntVector(g.inverted.primes.begin(),
                                                        g.inverted.primes.end()))}};
      break;
  }
  return json{{"inverted", std::move(inverted)},
              {"rank", g.rank},
              {"torsion", to_json(g.torsion_group())},
              {"text", g.to_string()}};
}

json to_json(const CompletedGroup& g) {
  return json{{"p", to_json(g.p)},
              {"zp_rank", g.zp_rank},
              {"finite_part", to_json(g.finite_part)},
              {"text", g.to_string()}};
}

}  // namespace fgab::cli
