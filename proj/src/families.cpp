#include "fuzzybv/families.hpp"

#include "fuzzybv/errors.hpp"

#include <cmath>
#include <set>

namespace fuzzybv::families {

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : j.items()) {
        if (!ok.count(key)) throw ConfigError(join(path, key), "unknown field");
    }
}

namespace {

const json& required(const json& j, const char* key, const std::string& path) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(join(path, key), "missing required field");
    return *it;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path, "expected a finite number");
    return x;
}

std::vector<double> number_array(const json& v, const std::string& path, std::size_t min_size = 1) {
    if (!v.is_array() || v.size() < min_size) {
        throw ConfigError(path, "expected an array of at least " + std::to_string(min_size) + " numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string family_of(const json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "expected an object");
    const json& f = required(j, "family", path);
    if (!f.is_string()) throw ConfigError(join(path, "family"), "expected a string");
    return f.get<std::string>();
}

}  // namespace

double number_field(const json& j, const char* key, const std::string& path) {
    return as_number(required(j, key, path), join(path, key));
}

double number_field(const json& j, const char* key, const std::string& path, double fallback) {
    return j.contains(key) ? number_field(j, key, path) : fallback;
}

index_t integer_field(const json& j, const char* key, const std::string& path) {
    const json& v = required(j, key, path);
    if (!v.is_number_integer()) throw ConfigError(join(path, key), "expected an integer");
    return v.get<index_t>();
}

index_t integer_field(const json& j, const char* key, const std::string& path, index_t fallback) {
    return j.contains(key) ? integer_field(j, key, path) : fallback;
}

json normalize_generator(const json& j, const std::string& path) {
    const std::string family = family_of(j, path);
    if (family == "const") {
        reject_unknown(j, {"family", "c"}, path);
        return {{"family", family}, {"c", number_field(j, "c", path)}};
    }
    if (family == "power") {
        reject_unknown(j, {"family", "a", "s", "p"}, path);
        return {{"family", family},
                {"a", number_field(j, "a", path, 1.0)},
                {"s", number_field(j, "s", path, 0.0)},
                {"p", number_field(j, "p", path)}};
    }
    if (family == "geometric") {
        reject_unknown(j, {"family", "a", "r"}, path);
        return {{"family", family}, {"a", number_field(j, "a", path, 1.0)}, {"r", number_field(j, "r", path)}};
    }
    if (family == "oscillating") {
        reject_unknown(j, {"family", "c", "a", "s", "p"}, path);
        return {{"family", family},
                {"c", number_field(j, "c", path, 0.0)},
                {"a", number_field(j, "a", path, 1.0)},
                {"s", number_field(j, "s", path, 0.0)},
                {"p", number_field(j, "p", path, 0.0)}};
    }
    if (family == "table") {
        reject_unknown(j, {"family", "values"}, path);
        return {{"family", family}, {"values", number_array(required(j, "values", path), join(path, "values"))}};
    }
    if (family == "index_scaled") {
        reject_unknown(j, {"family", "of"}, path);
        return {{"family", family}, {"of", normalize_generator(required(j, "of", path), join(path, "of"))}};
    }
    throw ConfigError(join(path, "family"), "unknown generator family '" + family + "'");
}

RealGenerator build_generator(const json& c, index_t start) {
    const std::string family = c.at("family").get<std::string>();
    if (family == "const") return RealGenerator::constant(c.at("c").get<double>());
    if (family == "power") {
        return RealGenerator::power(c.at("a").get<double>(), c.at("s").get<double>(), c.at("p").get<double>());
    }
    if (family == "geometric") return RealGenerator::geometric(c.at("a").get<double>(), c.at("r").get<double>());
    if (family == "oscillating") {
        return RealGenerator::oscillating(c.at("c").get<double>(), c.at("a").get<double>(),
                                          c.at("s").get<double>(), c.at("p").get<double>());
    }
    if (family == "table") return RealGenerator::table(c.at("values").get<std::vector<double>>(), start);
    if (family == "index_scaled") return build_generator(c.at("of"), start).index_scaled();
    throw ConfigError("family", "unknown generator family '" + family + "'");
}

json generator_to_json(const RealGenerator& g) {
    return std::visit(
        [](const auto& f) -> json {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, RealGenerator::Constant>) {
                return {{"family", "const"}, {"c", f.c}};
            } else if constexpr (std::is_same_v<F, RealGenerator::Power>) {
                return {{"family", "power"}, {"a", f.a}, {"s", f.s}, {"p", f.p}};
            } else if constexpr (std::is_same_v<F, RealGenerator::Geometric>) {
                return {{"family", "geometric"}, {"a", f.a}, {"r", f.r}};
            } else if constexpr (std::is_same_v<F, RealGenerator::Oscillating>) {
                return {{"family", "oscillating"}, {"c", f.c}, {"a", f.a}, {"s", f.s}, {"p", f.p}};
            } else if constexpr (std::is_same_v<F, RealGenerator::Table>) {
                return {{"family", "table"}, {"values", f.values}};
            } else {
                return {{"family", "index_scaled"}, {"of", generator_to_json(*f.inner)}};
            }
        },
        g.family());
}

json normalize_fuzzy(const json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(path, "expected a fuzzy number object");
    json out;
    if (j.contains("crisp")) {
        reject_unknown(j, {"crisp"}, path);
        out = {{"crisp", number_field(j, "crisp", path)}};
    } else if (j.contains("triangular")) {
        reject_unknown(j, {"triangular"}, path);
        const auto v = number_array(j["triangular"], join(path, "triangular"), 3);
        if (v.size() != 3) throw ConfigError(join(path, "triangular"), "expected [a, b, c]");
        out = {{"triangular", v}};
    } else if (j.contains("trapezoidal")) {
        reject_unknown(j, {"trapezoidal"}, path);
        const auto v = number_array(j["trapezoidal"], join(path, "trapezoidal"), 4);
        if (v.size() != 4) throw ConfigError(join(path, "trapezoidal"), "expected [a, b, c, d]");
        out = {{"trapezoidal", v}};
    } else {
        reject_unknown(j, {"levels", "lower", "upper"}, path);
        out = {{"levels", number_array(required(j, "levels", path), join(path, "levels"))},
               {"lower", number_array(required(j, "lower", path), join(path, "lower"))},
               {"upper", number_array(required(j, "upper", path), join(path, "upper"))}};
    }
    try {
        (void)build_fuzzy(out);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    }
    return out;
}

FuzzyNumber build_fuzzy(const json& c) {
    if (c.contains("crisp")) return FuzzyNumber::crisp(c["crisp"].get<double>());
    if (c.contains("triangular")) {
        const auto v = c["triangular"].get<std::vector<double>>();
        return FuzzyNumber::triangular(v.at(0), v.at(1), v.at(2));
    }
    if (c.contains("trapezoidal")) {
        const auto v = c["trapezoidal"].get<std::vector<double>>();
        return FuzzyNumber::trapezoidal(v.at(0), v.at(1), v.at(2), v.at(3));
    }
    return FuzzyNumber::from_envelope(c.at("levels").get<std::vector<double>>(),
                                      c.at("lower").get<std::vector<double>>(),
                                      c.at("upper").get<std::vector<double>>());
}

json fuzzy_to_json(const FuzzyNumber& x) {
    if (x.levels().size() == 2 && x.lower()[0] == x.upper()[0]) return {{"crisp", x.lower()[0]}};
    return {{"levels", std::vector<double>(x.levels().begin(), x.levels().end())},
            {"lower", std::vector<double>(x.lower().begin(), x.lower().end())},
            {"upper", std::vector<double>(x.upper().begin(), x.upper().end())}};
}

json normalize_sequence(const json& j, const std::string& path, bool top_level) {
    const std::string family = family_of(j, path);
    json out;
    auto allow = [&](std::initializer_list<const char*> keys) {
        if (!top_level && j.contains("start")) {
            throw ConfigError(join(path, "start"), "only the outermost sequence may set start");
        }
        json probe = j;
        probe.erase("start");
        reject_unknown(probe, keys, path);
    };
    if (family == "crisp") {
        allow({"family", "value"});
        out = {{"family", family}, {"value", normalize_generator(required(j, "value", path), join(path, "value"))}};
    } else if (family == "triangular") {
        allow({"family", "a", "b", "c"});
        out = {{"family", family}};
        for (const char* k : {"a", "b", "c"}) out[k] = normalize_generator(required(j, k, path), join(path, k));
    } else if (family == "constant") {
        allow({"family", "value"});
        out = {{"family", family}, {"value", normalize_fuzzy(required(j, "value", path), join(path, "value"))}};
    } else if (family == "table") {
        allow({"family", "values"});
        const json& v = required(j, "values", path);
        if (!v.is_array() || v.empty()) throw ConfigError(join(path, "values"), "expected a non-empty array");
        json values = json::array();
        for (std::size_t i = 0; i < v.size(); ++i) {
            values.push_back(normalize_fuzzy(v[i], join(path, "values") + "[" + std::to_string(i) + "]"));
        }
        out = {{"family", family}, {"values", values}};
    } else if (family == "alternating") {
        allow({"family", "odd", "even"});
        out = {{"family", family},
               {"odd", normalize_sequence(required(j, "odd", path), join(path, "odd"), false)},
               {"even", normalize_sequence(required(j, "even", path), join(path, "even"), false)}};
    } else if (family == "perturbed") {
        allow({"family", "base", "by"});
        out = {{"family", family},
               {"base", normalize_sequence(required(j, "base", path), join(path, "base"), false)},
               {"by", normalize_sequence(required(j, "by", path), join(path, "by"), false)}};
    } else {
        throw ConfigError(join(path, "family"), "unknown sequence family '" + family + "'");
    }
    if (top_level && j.contains("start")) {
        const index_t s = integer_field(j, "start", path);
        if (s < 0) throw ConfigError(join(path, "start"), "start must be non-negative");
        out["start"] = s;
    }
    return out;
}

index_t sequence_start(const json& c, index_t fallback) {
    return c.contains("start") ? c["start"].get<index_t>() : fallback;
}

FuzzySequence build_sequence(const json& c, index_t start) {
    const std::string family = c.at("family").get<std::string>();
    if (family == "crisp") return FuzzySequence::crisp(build_generator(c.at("value"), start), start);
    if (family == "triangular") {
        return FuzzySequence::triangular(build_generator(c.at("a"), start), build_generator(c.at("b"), start),
                                         build_generator(c.at("c"), start), start);
    }
    if (family == "constant") return FuzzySequence::constant(build_fuzzy(c.at("value")), start);
    if (family == "table") {
        std::vector<FuzzyNumber> values;
        for (const auto& v : c.at("values")) values.push_back(build_fuzzy(v));
        return FuzzySequence::table(std::move(values), start);
    }
    if (family == "alternating") {
        return FuzzySequence::alternating(build_sequence(c.at("odd"), start), build_sequence(c.at("even"), start));
    }
    if (family == "perturbed") {
        return FuzzySequence::perturbed(build_sequence(c.at("base"), start), build_sequence(c.at("by"), start));
    }
    throw ConfigError("family", "unknown sequence family '" + family + "'");
}

namespace {

// Structural zero checks that need no horizon; index-dependent zeros are caught
// by WeightScheme::check_admissible once the horizon is known.
void check_nonzero_weight(const json& g, const std::string& path) {
    const std::string family = g.at("family").get<std::string>();
    auto zero = [&](const char* key) {
        if (g.at(key).get<double>() == 0.0) {
            throw ConfigError(join(path, key), "weights must be nonzero (set U)");
        }
    };
    if (family == "const") zero("c");
    if (family == "power" || family == "geometric") zero("a");
    if (family == "geometric") zero("r");
    if (family == "table") {
        for (double v : g.at("values")) {
            if (v == 0.0) throw ConfigError(join(path, "values"), "weights must be nonzero (set U)");
        }
    }
    if (family == "index_scaled") check_nonzero_weight(g.at("of"), join(path, "of"));
}

}  // namespace

json normalize_scheme(const json& j, const std::string& path) {
    reject_unknown(j, {"u", "v", "start"}, path);
    const index_t start = integer_field(j, "start", path, 0);
    if (start < 0) throw ConfigError(join(path, "start"), "start must be non-negative");
    json out = {{"u", normalize_generator(required(j, "u", path), join(path, "u"))},
                {"v", normalize_generator(required(j, "v", path), join(path, "v"))},
                {"start", start}};
    check_nonzero_weight(out["u"], join(path, "u"));
    check_nonzero_weight(out["v"], join(path, "v"));
    return out;
}

WeightScheme build_scheme(const json& c) {
    const index_t start = c.at("start").get<index_t>();
    return WeightScheme(build_generator(c.at("u"), start), build_generator(c.at("v"), start), start);
}

}  // namespace fuzzybv::families
