#pragma once

// Closed-form family records for generators, fuzzy literals, sequences and
// weight schemes, as they appear in run configs and scenario parameter blocks.
//
// normalize_* validates a record, rejects unknown fields, fills defaults and
// returns the canonical record; normalizing a canonical record is a no-op.
// Errors are ConfigError carrying the dotted path of the offending field.
// build_* turns a canonical record into a live object.

#include "fuzzybv/fuzzy_number.hpp"
#include "fuzzybv/fuzzy_sequence.hpp"
#include "fuzzybv/weighted_mean.hpp"

#include <json.hpp>

#include <string>

namespace fuzzybv::families {

using json = nlohmann::json;

/// {"family": "const"|"power"|"geometric"|"oscillating"|"table"|"index_scaled", ...}
json normalize_generator(const json& j, const std::string& path);
RealGenerator build_generator(const json& canonical, index_t start);
json generator_to_json(const RealGenerator& g);

/// {"crisp": r} | {"triangular": [a,b,c]} | {"trapezoidal": [a,b,c,d]}
/// | {"levels": [...], "lower": [...], "upper": [...]}
json normalize_fuzzy(const json& j, const std::string& path);
FuzzyNumber build_fuzzy(const json& canonical);
json fuzzy_to_json(const FuzzyNumber& x);

/// {"family": "crisp"|"triangular"|"constant"|"table"|"alternating"|"perturbed", ...}
/// Only the outermost record may carry "start".
json normalize_sequence(const json& j, const std::string& path, bool top_level = true);
FuzzySequence build_sequence(const json& canonical, index_t start);
/// The record's own "start", or `fallback` when it has none.
index_t sequence_start(const json& canonical, index_t fallback);

/// {"u": generator, "v": generator, "start": n}
json normalize_scheme(const json& j, const std::string& path);
WeightScheme build_scheme(const json& canonical);

/// Field helpers shared by config parsers.
void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& path);
double number_field(const json& j, const char* key, const std::string& path);
double number_field(const json& j, const char* key, const std::string& path, double fallback);
index_t integer_field(const json& j, const char* key, const std::string& path);
index_t integer_field(const json& j, const char* key, const std::string& path, index_t fallback);
std::string join(const std::string& path, const std::string& key);

}  // namespace fuzzybv::families
