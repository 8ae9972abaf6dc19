#pragma once

#include "fgab/exact.hpp"
#include "fgab/padic.hpp"
#include "fgab/towers.hpp"

#include <nlohmann/json.hpp>

#include <string>

// Conversions between library objects and the JSON job/report schema
// (docs/json_schema.md). Readers take a dotted path naming the value for
// error messages and throw InputError on schema violations; mathematical
// failures (a map that is not well defined, a sequence that is not exact)
// surface as PreconditionError from the library.
namespace fgab::cli {

using nlohmann::json;

const json& field(const json& obj, const std::string& key, const std::string& path);
bool has_field(const json& obj, const std::string& key);

Integer integer_from_json(const json& v, const std::string& path);
unsigned long count_from_json(const json& v, const std::string& path);
IntVector vector_from_json(const json& v, const std::string& path);
FgGroup group_from_json(const json& v, const std::string& path);
Homomorphism hom_from_json(const json& v, const std::string& path);
ShortExactSeq ses_from_json(const json& v, const std::string& path);
std::vector<Homomorphism> homs_from_json(const json& v, const std::string& path);
PrimeSet primes_from_json(const json& v, const std::string& path);
Tower tower_from_json(const json& v, const std::string& path);
ColimSequence colim_from_json(const json& v, const std::string& path);

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json to_json(const Integer& a);
json to_json(const IntVector& v);
json to_json(const FgGroup& g);
json to_json(const GroupElement& x);
json to_json(const Homomorphism& f);
json to_json(const ShortExactSeq& e);
json to_json(const LocalizedGroup& g);
json to_json(const CompletedGroup& g);

}  // namespace fgab::cli
