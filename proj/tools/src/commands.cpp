#include "fgab_cli/commands.hpp"

#include "fgab/error.hpp"
#include "fgab/extensions.hpp"
#include "fgab/six_term.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace fgab::cli {

namespace {

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string string_field(const json& job, const std::string& key) {
  const json& v = field(job, key, "job");
  if (!v.is_string()) throw InputError("job." + key + ": expected a string");
  return v.get<std::string>();
}

FgGroup group_at(const json& job, const std::string& key) {
  return group_from_json(field(job, key, "job"), "job." + key);
}

std::vector<FgGroup> groups_at(const json& job, const std::string& key, std::size_t expected) {
  const json& v = field(job, key, "job");
  if (!v.is_array()) throw InputError("job." + key + ": expected an array of groups");
  if (expected != 0 && v.size() != expected)
    throw InputError("job." + key + ": expected " + std::to_string(expected) + " groups, got " +
                     std::to_string(v.size()));
  std::vector<FgGroup> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(group_from_json(v[i], "job." + key + "[" + std::to_string(i) + "]"));
  return out;
}

Homomorphism hom_at(const json& job, const std::string& key) {
  return hom_from_json(field(job, key, "job"), "job." + key);
}

ShortExactSeq ses_at(const json& job, const std::string& key) {
  return ses_from_json(field(job, key, "job"), "job." + key);
}

LiftPolicy policy_of(const json& job) {
  LiftPolicy p;
  if (has_field(job, "seed")) p.seed = count_from_json(job["seed"], "job.seed");
  return p;
}

Report group_report(const FgGroup& g) { return {to_json(g), g.to_string() + "\n"}; }

Report hom_report(const Homomorphism& f) { return {to_json(f), str(f) + "\n"}; }

// --------------------------------------------------------------- groups

Report cmd_classify(const json& job) {
  if (!has_field(job, "presentation")) return group_report(group_at(job, "group"));
  const json& p = job["presentation"];
  const unsigned long m = count_from_json(field(p, "generators", "job.presentation"),
                                          "job.presentation.generators");
  const json& rels = field(p, "relations", "job.presentation");
  if (!rels.is_array()) throw InputError("job.presentation.relations: expected an array");
  Presentation pres{m, IntMatrix(m, rels.size())};
  for (std::size_t c = 0; c < rels.size(); ++c) {
    const std::string path = "job.presentation.relations[" + std::to_string(c) + "]";
    const IntVector r = vector_from_json(rels[c], path);
    if (r.size() != m)
      throw InputError(path + ": expected " + std::to_string(m) + " coefficients");
    for (std::size_t i = 0; i < m; ++i) pres.relations(i, c) = r[i];
  }
  const Classification cls = classify(pres);
  if (!verify_classification(pres, cls))
    throw std::logic_error("classification failed its own verification");
  return group_report(cls.group);
}

Report cmd_sum(const json& job) {
  const auto gs = groups_at(job, "groups", 0);
  return group_report(direct_sum(gs).group);
}

// A functor's value on two groups, or its induced map when "maps" is given.
Report functor_report(const json& job, const std::function<FgGroup(const FgGroup&, const FgGroup&)>& on_groups,
                      const std::function<Homomorphism(const Homomorphism&, const Homomorphism&)>& on_maps) {
  if (has_field(job, "maps")) {
    const auto fs = homs_from_json(job["maps"], "job.maps");
    if (fs.size() != 2) throw InputError("job.maps: expected two homomorphisms");
    return hom_report(on_maps(fs[0], fs[1]));
  }
  const auto gs = groups_at(job, "groups", 2);
  return group_report(on_groups(gs[0], gs[1]));
}

// ------------------------------------------------------------ sequences

Report sequence_report(const SixTermSequence& s) {
  json groups = json::array(), maps = json::array(), nodes = json::array();
  std::string text = s.kind() + ":";
  for (std::size_t i = 0; i < s.groups().size(); ++i) {
    groups.push_back(to_json(s.groups()[i]));
    text += (i ? " -> " : " ") + s.groups()[i].to_string();
  }
  text += "\n";
  for (std::size_t i = 0; i < s.maps().size(); ++i) {
    maps.push_back(to_json(s.maps()[i]));
    text += "map " + std::to_string(i) + (i == 2 ? " (delta): " : ": ") + str(s.maps()[i]) + "\n";
  }
  bool exact = true;
  for (const auto& c : s.checks()) {
    nodes.push_back(c.exact);
    exact = exact && c.exact;
  }
  text += "exactness: " + std::string(exact ? "verified" : "FAILED") + " at all " +
          std::to_string(s.checks().size()) + " nodes\n";
  json data{{"kind", s.kind()},     {"groups", std::move(groups)}, {"maps", std::move(maps)},
            {"delta", to_json(s.delta())}, {"exact", exact},      {"nodes", std::move(nodes)}};
  return {std::move(data), std::move(text)};
}

Report cmd_six_term(const json& job) {
  const std::string kind = string_field(job, "kind");
  const LiftPolicy policy = policy_of(job);
  if (kind == "mod-n") {
    const Integer n = integer_from_json(field(job, "n", "job"), "job.n");
    return sequence_report(six_term_mod_n(ses_at(job, "sequence"), n, policy));
  }
  if (kind != "tor" && kind != "ext-cov" && kind != "ext-contra")
    throw InputError("job.kind: unknown six-term kind '" + kind +
                   "' (expected mod-n, tor, ext-cov or ext-contra)");
  const ShortExactSeq e = ses_at(job, "sequence");
  const FgGroup g = group_at(job, "group");
  if (kind == "tor") return sequence_report(six_term_tor(g, e, policy));
  if (kind == "ext-cov") return sequence_report(six_term_ext_cov(g, e, policy));
  return sequence_report(six_term_ext_contra(e, g, policy));
}

Report cmd_snake(const json& job) {
  ShortExactSeq top = ses_at(job, "top");
  ShortExactSeq bottom = ses_at(job, "bottom");
  Homomorphism f = hom_at(job, "f");
  Homomorphism g = hom_at(job, "g");
  Homomorphism h = hom_at(job, "h");
  const SnakeInput s(std::move(top), std::move(bottom), std::move(f), std::move(g), std::move(h));
  return sequence_report(snake(s, policy_of(job)));
}

Report cmd_split(const json& job) {
  if (has_field(job, "idempotent")) {
    const IdempotentSplitting s = split_by_idempotent(hom_at(job, "idempotent"));
    json data{{"image", to_json(s.image.group)},
              {"complement", to_json(s.complement.group)},
              {"image_inclusion", to_json(s.image.inclusion)},
              {"complement_inclusion", to_json(s.complement.inclusion)},
              {"verified", true}};
    std::string text = "image: " + str(s.image.inclusion) + "\ncomplement: " +
                       str(s.complement.inclusion) +
                       "\nverified: sum of image and complement maps isomorphically onto " +
                       s.iso.codomain().to_string() + "\n";
    return {std::move(data), std::move(text)};
  }
  const ShortExactSeq e = ses_at(job, "sequence");
  const Homomorphism sec = complete_splitting_from_retraction(e, hom_at(job, "retraction"));
  return {json{{"section", to_json(sec)}, {"verified", true}},
          "section: " + str(sec) + "\nverified: q s = 1, r s = 0, j r + s q = 1\n"};
}

Report cmd_five_lemma(const json& job) {
  const auto top = homs_from_json(field(job, "top", "job"), "job.top");
  const auto bottom = homs_from_json(field(job, "bottom", "job"), "job.bottom");
  const auto verticals = homs_from_json(field(job, "verticals", "job"), "job.verticals");
  const auto rep = five_lemma_verify(top, bottom, verticals);
  json data{{"p2_injective", rep.p2_injective},
            {"p2_surjective", rep.p2_surjective},
            {"confirmed", rep.confirmed()}};
  std::string text = std::string("p2 injective: ") + (rep.p2_injective ? "yes" : "no") +
                     "\np2 surjective: " + (rep.p2_surjective ? "yes" : "no") +
                     "\nfive lemma: " + (rep.confirmed() ? "confirmed" : "NOT confirmed") + "\n";
  return {std::move(data), std::move(text)};
}

// ------------------------------------------------------------ extensions

json class_json(const ExtClass& c) {
  return json{{"c", to_json(c.c)},
              {"a", to_json(c.a)},
              {"ext", to_json(c.element.parent())},
              {"element", to_json(c.element)}};
}

std::string class_text(const ExtClass& c) {
  return c.element.to_string() + " in Ext(" + c.c.to_string() + ", " + c.a.to_string() +
         ") = " + c.element.parent().to_string();
}

Report extension_report(const Extension& e) {
  const ExtClass c = extension_to_class(e);
  json data{{"a", to_json(e.a())},        {"b", to_json(e.b())}, {"c", to_json(e.c())},
            {"j", to_json(e.j())},        {"q", to_json(e.q())}, {"class", class_json(c)},
            {"exact", true}};
  std::string text = "extension: " + e.a().to_string() + " -> " + e.b().to_string() + " -> " +
                     e.c().to_string() + "\nj: " + str(e.j()) + "\nq: " + str(e.q()) +
                     "\nclass: " + class_text(c) +
                     "\nexactness: verified (j injective, q surjective, im j = ker q)\n";
  return {std::move(data), std::move(text)};
}

Report change_of_ends(const json& job, Extension (*op)(const Extension&, const Homomorphism&)) {
  const Extension e = ses_at(job, "extension");
  return extension_report(op(e, hom_at(job, "map")));
}

Report cmd_baer(const json& job) {
  const json& es = field(job, "extensions", "job");
  if (!es.is_array() || es.size() != 2)
    throw InputError("job.extensions: expected two extensions");
  const Extension e0 = ses_from_json(es[0], "job.extensions[0]");
  const Extension e1 = ses_from_json(es[1], "job.extensions[1]");
  return extension_report(baer_sum(e0, e1));
}

Report cmd_class_of(const json& job) {
  const ExtClass c = extension_to_class(ses_at(job, "extension"));
  return {class_json(c), "class: " + class_text(c) + "\n"};
}

Report cmd_extension_of(const json& job) {
  const FgGroup c = group_at(job, "c");
  const FgGroup a = group_at(job, "a");
  const FgGroup e = ext_group(c, a);
  const IntVector coords = vector_from_json(field(job, "element", "job"), "job.element");
  if (coords.size() != e.generator_count())
    throw InputError("job.element: Ext(" + c.to_string() + ", " + a.to_string() + ") = " +
                     e.to_string() + " needs " + std::to_string(e.generator_count()) +
                     " coordinates, got " + std::to_string(coords.size()));
  return extension_report(class_to_extension(ExtClass{c, a, GroupElement(e, coords)}));
}

// --------------------------------------------------------------- p-adic

Report cmd_localize(const json& job) {
  const FgGroup a = group_at(job, "group");
  const LocalizedGroup l =
      localize(a, primes_from_json(field(job, "invert", "job"), "job.invert"));
  return {to_json(l), l.to_string() + "\n"};
}

Integer prime_at(const json& job) { return integer_from_json(field(job, "p", "job"), "job.p"); }

Report cmd_complete(const json& job) {
  const FgGroup a = group_at(job, "group");
  const CompletedGroup g = complete(a, prime_at(job));
  return {to_json(g), g.to_string() + "\n"};
}

Report cmd_derived_complete(const json& job) {
  const FgGroup a = group_at(job, "group");
  const DerivedCompletion d = derived_completion(a, prime_at(job));
  return {json{{"l0", to_json(d.l0)}, {"l1", to_json(d.l1)}},
          "L0: " + d.l0.to_string() + "\nL1: " + d.l1.to_string() + "\n"};
}

Report padic_value(const PadicInt& x) {
  return {json{{"p", to_json(x.prime())},
               {"precision", x.precision()},
               {"residue", to_json(x.residue())}},
          to_string(x.residue()) + "\n"};
}

Report cmd_padic(const json& job) {
  const std::string op = string_field(job, "op");
  const Integer p = prime_at(job);
  const unsigned long k = count_from_json(field(job, "K", "job"), "job.K");
  const IntVector xs = vector_from_json(field(job, "operands", "job"), "job.operands");
  const std::size_t arity = op == "add" || op == "mul" ? 2 : 1;
  if (op != "add" && op != "mul" && op != "inv" && op != "digits" && op != "val")
    throw InputError("job.op: unknown p-adic operation '" + op +
                     "' (expected add, mul, inv, digits or val)");
  if (xs.size() != arity)
    throw InputError("job.operands: '" + op + "' takes " + std::to_string(arity) +
                     (arity == 1 ? " operand" : " operands"));
  const PadicInt x(p, k, xs[0]);
  if (op == "add") return padic_value(x + PadicInt(p, k, xs[1]));
  if (op == "mul") return padic_value(x * PadicInt(p, k, xs[1]));
  if (op == "inv") return padic_value(invert_unit(x));
  if (op == "digits") {
    const IntVector d = x.digits();
    std::string text = "[";
    for (std::size_t i = 0; i < d.size(); ++i) text += (i ? "," : "") + to_string(d[i]);
    return {json{{"digits", to_json(d)}}, text + "]\n"};
  }
  const PadicValuation v = valuation(x);
  if (v.infinite)
    return {json{{"infinite", true}, {"valuation", nullptr}}, "INFINITE_AT_PRECISION\n"};
  return {json{{"infinite", false}, {"valuation", v.value}}, std::to_string(v.value) + "\n"};
}

// --------------------------------------------------------------- towers

json ml_json(const MlCertificate& ml) {
  json stab = json::array();
  for (auto j : ml.stabilization) stab.push_back(j);
  return json{{"determined", ml.determined},
              {"stabilization", std::move(stab)},
              {"tail_start", ml.tail_start},
              {"tail_offset", ml.tail_offset},
              {"trace", ml.trace}};
}

std::string ml_text(const MlCertificate& ml) {
  if (!ml.determined) return "Mittag-Leffler: NOT_DETERMINED\ntrace: " + ml.trace + "\n";
  std::string text = "Mittag-Leffler: yes\n";
  for (std::size_t i = 0; i < ml.stabilization.size(); ++i)
    text += "j(" + std::to_string(i) + ") = " + std::to_string(ml.stabilization[i]) + "\n";
  text += "j(i) = i + " + std::to_string(ml.tail_offset) + " for i >= " +
          std::to_string(ml.tail_start) + "\ntrace: " + ml.trace + "\n";
  return text;
}

json lim_json(const LimValue& v) {
  switch (v.kind) {
    case LimValue::Kind::Group:
      return json{{"kind", "group"}, {"group", to_json(v.group)}, {"text", v.to_string()}};
    case LimValue::Kind::Completed:
      return json{{"kind", "completed"}, {"completed", to_json(*v.completed)}, {"text", v.to_string()}};
    case LimValue::Kind::Undetermined:
      return json{{"kind", "undetermined"}, {"reason", v.reason}, {"text", v.to_string()}};
  }
  return {};
}

Report cmd_tower(const json& job) {
  const std::string op = string_field(job, "op");
  const Tower t = tower_from_json(field(job, "tower", "job"), "job.tower");
  const std::size_t bound =
      has_field(job, "bound") ? count_from_json(job["bound"], "job.bound") : 64;
  if (op == "ml") {
    const MlCertificate ml = is_mittag_leffler(t, bound);
    return {ml_json(ml), ml_text(ml)};
  }
  if (op != "lim") throw InputError("job.op: unknown tower operation '" + op + "' (expected lim or ml)");
  const LimResult r = lim(t, bound);
  const char* verdict = r.lim1.zero ? "ZERO" : "UNDETERMINED";
  json data{{"lim", lim_json(r.lim)},
            {"lim1", json{{"verdict", verdict}, {"note", r.lim1.note}}},
            {"ml", ml_json(r.ml)}};
  std::string text = "lim: " + r.lim.to_string();
  if (r.lim.kind == LimValue::Kind::Undetermined) text += " (" + r.lim.reason + ")";
  text += "\nlim1: " + std::string(verdict) + " (" + r.lim1.note + ")\n";
  return {std::move(data), std::move(text)};
}

Report cmd_colim(const json& job) {
  const SymbolicGroup g = colim_pattern(colim_from_json(field(job, "sequence", "job"), "job.sequence"));
  json data{{"text", g.to_string()}};
  switch (g.kind) {
    case SymbolicGroup::Kind::Group:
      data["kind"] = "group";
      data["group"] = to_json(g.group);
      break;
    case SymbolicGroup::Kind::PAdic:
      data["kind"] = "padic";
      data["p"] = to_json(g.p);
      break;
    case SymbolicGroup::Kind::Prufer:
      data["kind"] = "prufer";
      data["p"] = to_json(g.p);
      break;
    case SymbolicGroup::Kind::Localized:
      data["kind"] = "localized";
      data["localized"] = to_json(*g.localized);
      break;
  }
  return {std::move(data), g.to_string() + "\n"};
}

using Handler = std::function<Report(const json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"classify", cmd_classify},
      {"sum", cmd_sum},
      {"hom",
       [](const json& j) {
         return functor_report(j, [](auto& a, auto& b) { return hom_group(a, b).group(); },
                               induced_hom);
       }},
      {"tensor", [](const json& j) { return functor_report(j, tensor_group, tensor_map); }},
      {"tor", [](const json& j) { return functor_report(j, tor_group, induced_tor); }},
      {"ext", [](const json& j) { return functor_report(j, ext_group, induced_ext); }},
      {"six-term", cmd_six_term},
      {"snake", cmd_snake},
      {"split", cmd_split},
      {"five-lemma", cmd_five_lemma},
      {"baer", cmd_baer},
      {"pullback", [](const json& j) { return change_of_ends(j, pullback); }},
      {"pushout", [](const json& j) { return change_of_ends(j, pushout); }},
      {"class-of", cmd_class_of},
      {"extension-of", cmd_extension_of},
      {"localize", cmd_localize},
      {"complete", cmd_complete},
      {"derived-complete", cmd_derived_complete},
      {"padic", cmd_padic},
      {"tower", cmd_tower},
      {"colim", cmd_colim},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

Report run_job(const json& job) {
  if (!job.is_object()) throw InputError("job: expected a JSON object");
  const std::string name = string_field(job, "command");
  auto it = handlers().find(name);
  if (it == handlers().end()) throw InputError("job.command: unknown command '" + name + "'");
  return it->second(job);
}

}  // namespace fgab::cli
