#include "fgab_cli/cli.hpp"

#include "fgab/error.hpp"
#include "fgab_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace fgab::cli {

namespace {

// Values collected from the command line; each subcommand copies the ones it
// owns into the job document.
struct Args {
  std::string out = "text";
  std::string json_file;
  std::vector<std::string> groups;
  std::string word;  // six-term kind, padic op, tower op
  std::vector<std::string> values;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> prime;
  std::optional<unsigned long> precision;
  std::optional<unsigned long> bound;
  std::optional<std::string> invert;
  std::optional<std::string> at;
};

json prime_list(const std::string& text) {
  json out = json::array();
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) out.push_back(p);
  return out;
}

json read_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open job file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("job file '" + path + "' is not valid JSON: " + e.what());
  }
}

// Fields given on the command line must not contradict the job file.
void merge_into(json& doc, const json& cli) {
  for (const auto& [key, value] : cli.items()) {
    if (doc.contains(key) && doc[key] != value)
      throw InputError("command line gives " + key + " = " + value.dump() +
                       " but the job file has " + doc[key].dump());
    doc[key] = value;
  }
}

int report_error(std::ostream& err, const std::string& message, int code) {
  err << "error: " << message << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations with finitely generated abelian groups.", "fgab"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  Args a;
  app.add_option("--out", a.out, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--json", a.json_file, "Read the job document from a JSON file");

  // Each entry builds the command-line part of the job for one subcommand.
  std::vector<std::pair<CLI::App*, std::function<json()>>> subs;
  auto group_positionals = [&](CLI::App* s, const char* what) {
    s->add_option("groups", a.groups, what);
  };
  auto add = [&](const char* name, const char* help, std::function<json()> build) {
    CLI::App* s = app.add_subcommand(name, help);
    subs.emplace_back(s, std::move(build));
    return s;
  };
  auto with_groups = [&](const char* key) {
    return [&a, key] {
      json j;
      if (!a.groups.empty()) j[key] = a.groups;
      return j;
    };
  };
  auto single_group = [&a]() {
    json j;
    if (a.groups.size() > 1) throw InputError("expected one group expression");
    if (!a.groups.empty()) j["group"] = a.groups[0];
    return j;
  };

  group_positionals(add("classify", "Canonical form of a group", single_group), "Group expression");
  group_positionals(add("sum", "Direct sum of groups", with_groups("groups")), "Group expressions");
  for (auto [f, help] : {std::pair{"hom", "Hom(A, B)"}, {"tensor", "A (x) B"},
                         {"tor", "Tor(A, B)"}, {"ext", "Ext(A, B)"}})
    group_positionals(add(f, help, with_groups("groups")), "A and B");

  auto seeded = [&a](json j) {
    if (a.seed) j["seed"] = *a.seed;
    return j;
  };
  CLI::App* six = add("six-term", "Six-term exact sequence (job via --json)", [&] {
    json j;
    if (!a.word.empty()) j["kind"] = a.word;
    return seeded(std::move(j));
  });
  six->add_option("kind", a.word, "mod-n, tor, ext-cov or ext-contra")
      ->check(CLI::IsMember({"mod-n", "tor", "ext-cov", "ext-contra"}));
  six->add_option("--seed", a.seed, "Randomize lift choices");
  add("snake", "Snake lemma sequence (job via --json)", [&] { return seeded(json::object()); })
      ->add_option("--seed", a.seed, "Randomize lift choices");
  for (auto [name, help] :
       {std::pair{"split", "Splitting from an idempotent or a retraction (job via --json)"},
        {"five-lemma", "Check the five lemma on a ladder (job via --json)"},
        {"baer", "Baer sum of two extensions (job via --json)"},
        {"pullback", "Pull an extension back along a map into C (job via --json)"},
        {"pushout", "Push an extension out along a map from A (job via --json)"},
        {"class-of", "Class of an extension in Ext(C, A) (job via --json)"}})
    add(name, help, [] { return json::object(); });

  add("extension-of", "Extension realizing a class of Ext(C, A)", [&] {
    json j;
    if (a.values.size() > 0) j["c"] = a.values[0];
    if (a.values.size() > 1) j["a"] = a.values[1];
    if (a.values.size() > 2) j["element"] = std::vector<std::string>(a.values.begin() + 2, a.values.end());
    return j;
  })->add_option("operands", a.values, "C, A, then the coordinates of the class");

  CLI::App* loc = add("localize", "Localization at a set of primes", [&] {
    json j = single_group();
    if (a.invert && a.at) throw InputError("--invert and --at are mutually exclusive");
    if (a.invert) j["invert"] = *a.invert == "all" ? json("all") : prime_list(*a.invert);
    if (a.at) j["invert"] = json{{"all_except", prime_list(*a.at)}};
    return j;
  });
  group_positionals(loc, "Group expression");
  loc->add_option("--invert", a.invert, "Comma-separated primes to invert, or 'all'");
  loc->add_option("--at", a.at, "Invert every prime except these");

  auto with_prime = [&a, single_group] {
    json j = single_group();
    if (a.prime) j["p"] = *a.prime;
    return j;
  };
  for (auto [name, help] : {std::pair{"complete", "p-completion"},
                            {"derived-complete", "Derived p-completion L0, L1"}}) {
    CLI::App* s = add(name, help, with_prime);
    group_positionals(s, "Group expression");
    s->add_option("-p", a.prime, "Prime");
  }

  CLI::App* padic = add("padic", "Truncated p-adic arithmetic", [&] {
    json j;
    if (!a.word.empty()) j["op"] = a.word;
    if (a.prime) j["p"] = *a.prime;
    if (a.precision) j["K"] = *a.precision;
    if (!a.values.empty()) j["operands"] = a.values;
    return j;
  });
  padic->add_option("op", a.word, "add, mul, inv, digits or val")
      ->check(CLI::IsMember({"add", "mul", "inv", "digits", "val"}));
  padic->add_option("operands", a.values, "Integers");
  padic->add_option("-p", a.prime, "Prime");
  padic->add_option("-K", a.precision, "Precision");

  CLI::App* tower = add("tower", "lim, lim1 and Mittag-Leffler data (job via --json)", [&] {
    json j;
    if (!a.word.empty()) j["op"] = a.word;
    if (a.bound) j["bound"] = *a.bound;
    return j;
  });
  tower->add_option("op", a.word, "lim or ml")->check(CLI::IsMember({"lim", "ml"}));
  tower->add_option("--bound", a.bound, "Image-chain stabilization bound");
  add("colim", "Recognized colimit patterns (job via --json)", [] { return json::object(); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kInputError;
  }

  try {
    json job = a.json_file.empty() ? json::object() : read_job_file(a.json_file);
    auto used = std::find_if(subs.begin(), subs.end(),
                             [](const auto& s) { return s.first->parsed(); });
    if (used != subs.end()) {
      json cli = used->second();
      cli["command"] = used->first->get_name();
      merge_into(job, cli);
    } else if (a.json_file.empty()) {
      err << app.help();
      return kInputError;
    }
    const Report r = run_job(job);
    if (a.out == "json")
      out << r.data.dump() << "\n";
    else
      out << r.text;
    return kSuccess;
  } catch (const InputError& e) {
    return report_error(err, e.what(), kInputError);
  } catch (const json::exception& e) {
    return report_error(err, std::string("malformed job: ") + e.what(), kInputError);
  } catch (const PreconditionError& e) {
    return report_error(err, e.what(), kPreconditionFailure);
  } catch (const std::exception& e) {
    return report_error(err, std::string("internal error: ") + e.what(), kInternalError);
  }
}

}  // namespace fgab::cli
