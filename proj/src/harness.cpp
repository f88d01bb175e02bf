#include "fuzzybv/harness.hpp"

#include "fuzzybv/errors.hpp"
#include "fuzzybv/families.hpp"
#include "fuzzybv/sequence_spaces.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

namespace fuzzybv {

using nlohmann::json;
namespace fam = families;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Slack for inequalities that hold with equality in exact arithmetic and are
// evaluated through different rounding paths on the two sides.
constexpr double kRoundingSlack = 1e-12;

// ---- default parameter records ---------------------------------------------------------------

json gen_const(double c) { return {{"family", "const"}, {"c", c}}; }
json gen_power(double a, double s, double p) { return {{"family", "power"}, {"a", a}, {"s", s}, {"p", p}}; }
json gen_geometric(double a, double r) { return {{"family", "geometric"}, {"a", a}, {"r", r}}; }
json gen_oscillating(double c, double a, double s, double p) {
    return {{"family", "oscillating"}, {"c", c}, {"a", a}, {"s", s}, {"p", p}};
}
json scheme(json u, json v, index_t start) { return {{"u", std::move(u)}, {"v", std::move(v)}, {"start", start}}; }
json crisp_seq(json value) { return {{"family", "crisp"}, {"value", std::move(value)}}; }
json triangular_seq(json a, json b, json c) {
    return {{"family", "triangular"}, {"a", std::move(a)}, {"b", std::move(b)}, {"c", std::move(c)}};
}

// u_k = k^-4, v = 1 from index 1
json quartic_scheme() { return scheme(gen_power(1, 0, -4), gen_const(1), 1); }
// crisp k at odd k, crisp 0 at even k
json unbounded_sequence() {
    return {{"family", "alternating"},
            {"odd", crisp_seq(gen_power(1, 0, 1))},
            {"even", crisp_seq(gen_const(0))}};
}

// ---- assertion bookkeeping -------------------------------------------------------------------

class Checks {
public:
    void le(std::string name, double measured, double threshold, std::string note = {}) {
        add(std::move(name), measured, threshold, "<=", measured <= threshold, std::move(note));
    }
    void ge(std::string name, double measured, double threshold, std::string note = {}) {
        add(std::move(name), measured, threshold, ">=", measured >= threshold, std::move(note));
    }
    void eq(std::string name, double measured, double expected, std::string note = {}) {
        add(std::move(name), measured, expected, "==", measured == expected, std::move(note));
    }
    void verdict(std::string name, const SeriesVerdict& v, Verdict expected) {
        add(std::move(name), v.slope, kNaN, "verdict", v.verdict == expected,
            std::string(to_string(v.verdict)) + " (expected " + std::string(to_string(expected)) + ")");
    }
    void growth(std::string name, const SupNormPartial& s, Growth expected) {
        add(std::move(name), s.sup, kNaN, "growth", s.growth == expected,
            std::string(to_string(s.growth)) + " (expected " + std::string(to_string(expected)) + ")");
    }

    std::vector<Assertion> take() { return std::move(list_); }

private:
    void add(std::string name, double measured, double threshold, std::string rel, bool pass, std::string note) {
        list_.push_back({std::move(name), measured, threshold, std::move(rel), pass, std::move(note)});
    }
    std::vector<Assertion> list_;
};

// ---- parameter access --------------------------------------------------------------------------

struct Params {
    const json& j;

    index_t horizon(const char* key, index_t start) const {
        const index_t k = fam::integer_field(j, key, "params");
        if (k < start) throw ConfigError(fam::join("params", key), "horizon below start index");
        return k;
    }
    double number(const char* key) const { return fam::number_field(j, key, "params"); }
    WeightScheme scheme(const char* key = "scheme") const {
        const std::string path = fam::join("params", key);
        if (!j.contains(key)) throw ConfigError(path, "missing required field");
        return fam::build_scheme(fam::normalize_scheme(j[key], path));
    }
    FuzzySequence sequence(const char* key, index_t start) const {
        const std::string path = fam::join("params", key);
        if (!j.contains(key)) throw ConfigError(path, "missing required field");
        const json c = fam::normalize_sequence(j[key], path);
        if (fam::sequence_start(c, start) != start) {
            throw ConfigError(path + ".start", "sequence and scheme start indices differ");
        }
        return fam::build_sequence(c, start);
    }
    FuzzyNumber fuzzy(const char* key) const {
        const std::string path = fam::join("params", key);
        if (!j.contains(key)) throw ConfigError(path, "missing required field");
        return fam::build_fuzzy(fam::normalize_fuzzy(j[key], path));
    }
};

void admissible(const WeightScheme& s, index_t horizon) {
    try {
        s.check_admissible(horizon);
    } catch (const std::exception& e) {
        throw ConfigError("params.scheme", e.what());
    }
}

std::vector<double> magnitudes(const RealGenerator& g, index_t first, index_t last, double power = 1.0) {
    std::vector<double> out;
    for (index_t k = first; k <= last; ++k) out.push_back(std::pow(std::abs(g(k)), power));
    return out;
}

// ---- scenarios ---------------------------------------------------------------------------------

void t2_inclusion(const Params& p, Checks& c, json& ev) {
    const WeightScheme s = p.scheme();
    const index_t K = p.horizon("K", s.start());
    admissible(s, K);
    const double exponent = p.number("p");
    if (!(exponent > 1.0)) throw ConfigError("params.p", "needs 1 < p < infinity");
    const double q = exponent / (exponent - 1.0);
    const FuzzySequence x = p.sequence("sequence", s.start());
    const ClassifierPolicy policy;

    // partial sums reach K + 1 because the bound also involves X_{i+1}
    const LpPartial lp = lp_partial(x, exponent, K + 1, policy);
    const double M = lp.sum;
    c.verdict("witness sequence lies in l_p", lp.verdict, Verdict::convergent);
    c.verdict("u lies in l_1", classify_series(magnitudes(s.u(), s.start(), K), s.start(), policy),
              Verdict::convergent);
    c.verdict("v lies in l_q", classify_series(magnitudes(s.v(), s.start(), K, q), s.start(), policy),
              Verdict::convergent);

    const VariationReport var = variation_report(x, s, K, policy);
    c.verdict("sequence lies in bv(u,v)", var.verdict, Verdict::convergent);

    double worst = 0.0, vq = 0.0;
    for (index_t k = s.start(); k <= K; ++k) {
        vq += std::pow(std::abs(s.v()(k)), q);
        const double bound = std::abs(s.u()(k)) * std::pow(vq, 1.0 / q) * 2.0 * std::pow(M, 1.0 / exponent);
        worst = std::max(worst, var.terms[static_cast<std::size_t>(k - s.start())] / bound);
    }
    c.le("max_k t_k / (|u_k| (sum |v_i|^q)^(1/q) 2 M^(1/p))", worst, 1.0);
    ev["q"] = q;
    ev["M"] = M;
    ev["variation_total"] = var.total();
    ev["witness_family"] = x.family();
}

void t2_strict_ex1(const Params& p, Checks& c, json& ev) {
    const WeightScheme s = p.scheme();
    const index_t K = p.horizon("K", s.start());
    const index_t from = p.horizon("average_from", s.start());
    if (from > K) throw ConfigError("params.average_from", "must not exceed K");
    admissible(s, K);
    const FuzzySequence x = p.sequence("sequence", s.start());
    const ClassifierPolicy policy;

    const RowSumDiagnostic rows = row_sum_diagnostic(s, K, policy);
    double worst_rel = 0.0;
    for (index_t k = s.start(); k <= K; ++k) {
        const double kd = static_cast<double>(k);
        const double exact = 1.0 / (kd * kd * kd);
        worst_rel = std::max(worst_rel, std::abs(rows.row_sums[static_cast<std::size_t>(k - s.start())] - exact) / exact);
    }
    c.le("max_k |r_k - 1/k^3| / (1/k^3)", worst_rel, 4 * std::numeric_limits<double>::epsilon(),
         "machine precision: 4 ulp");
    c.le("|sum |r_k| - 1.2020569|", std::abs(rows.abs_sum - 1.2020569), 1e-6, "partial zeta(3)");
    c.verdict("row sums lie in l_1", rows.verdict, Verdict::convergent);

    const SupNormPartial sup = sup_norm_partial(x, K, policy);
    c.growth("sequence is unbounded (not in l_inf)", sup, Growth::growing);

    const VariationReport var = variation_report(x, s, K, policy);
    c.verdict("sequence lies in bv(u,v)", var.verdict, Verdict::convergent);

    double acc = 0.0;
    for (index_t k = from; k <= K; ++k) {
        const double kd = static_cast<double>(k);
        acc += var.terms[static_cast<std::size_t>(k - s.start())] * kd * kd;
    }
    const double mean = acc / static_cast<double>(K - from + 1);
    c.ge("mean t_k k^2 over [average_from, K]", mean, 0.45);
    c.le("mean t_k k^2 over [average_from, K]", mean, 0.55);

    ev["row_abs_sum"] = rows.abs_sum;
    ev["sup_at_horizon"] = sup.sup;
    ev["variation_total"] = var.total();
    ev["inner_at_3"] = K >= 3 && s.start() <= 3 ? var.inner[static_cast<std::size_t>(3 - s.start())] : kNaN;
    ev["erratum"] = "closed form 2/k^2 for the weighted inner sum is superseded by direct summation: "
                    "inner_k = (k+1)^2/2 - 1 at odd k, so t_k k^2 -> 1/2";
}

void t3_limit_preserve(const Params& p, Checks& c, json& ev) {
    const WeightScheme s = p.scheme();
    const index_t K = p.horizon("K", s.start());
    admissible(s, K);
    const FuzzySequence x = p.sequence("sequence", s.start());
    if (!p.j.contains("n") || !p.j["n"].is_array() || p.j["n"].empty()) {
        throw ConfigError("params.n", "expected a non-empty array of perturbation sizes");
    }
    const RowSumDiagnostic rows = row_sum_diagnostic(s, K);
    const double lead = std::abs(s.u()(s.start()) * s.v()(s.start()));

    std::vector<double> ds;
    json table = json::array();
    for (std::size_t j = 0; j < p.j["n"].size(); ++j) {
        const json& nj = p.j["n"][j];
        if (!nj.is_number() || !(nj.get<double>() > 0)) {
            throw ConfigError("params.n[" + std::to_string(j) + "]", "expected a positive number");
        }
        const double n = nj.get<double>();
        const double w = 1.0 / n;
        const auto bump = FuzzySequence::triangular(RealGenerator::constant(-w), RealGenerator::constant(0),
                                                    RealGenerator::constant(w), s.start());
        const FuzzySequence xn = FuzzySequence::perturbed(x, bump);

        const double D = bv_metric_D(xn, x, s, K);
        const double rho = c_delta_metric_rho(xn, x, K);
        const double bound = (lead + 2.0 * rows.abs_sum) / n;
        const std::string tag = " at n = " + nj.dump();
        c.le("D(X^n, X)" + tag, D, bound * (1 + kRoundingSlack), "(|u v| + 2 sum |r_k|) / n");
        // deltas of X reach magnitude K, so rho carries absolute rounding near K * ulp(1)
        c.le("|rho(X^n, X) - 3/n| / (3/n)" + tag, std::abs(rho - 3.0 / n) * n / 3.0, 1e-9);
        c.le("D / rho" + tag, D / rho, (rows.abs_sum + lead) * (1 + kRoundingSlack), "sum |r_k| + |u v|");
        ds.push_back(D);
        table.push_back({{"n", n}, {"D", D}, {"rho", rho}, {"bound", bound}});
    }
    for (std::size_t j = 1; j < ds.size(); ++j) {
        const double decades = std::log10(p.j["n"][j].get<double>() / p.j["n"][j - 1].get<double>());
        c.ge("D decay factor per decade, step " + std::to_string(j), std::pow(ds[j - 1] / ds[j], 1.0 / decades), 9.0);
    }
    ev["row_abs_sum"] = rows.abs_sum;
    ev["perturbations"] = table;
}

void t4_stat_null(const Params& p, Checks& c, json& ev) {
    const WeightScheme s = p.scheme();
    const index_t n = p.horizon("n", s.start());
    admissible(s, n);
    const double eps = p.number("eps");
    if (!(eps > 0)) throw ConfigError("params.eps", "must be positive");
    const FuzzySequence x = p.sequence("sequence", s.start());

    const RowSumDiagnostic rows = row_sum_diagnostic(s, n);
    c.eq("inf_k |r_k|", rows.infimum, 1.0);
    c.ge("inf_k |r_k| is positive", rows.infimum, std::numeric_limits<double>::min());

    const VariationReport var = variation_report(x, s, n);
    c.verdict("sequence lies in bv(u,v)", var.verdict, Verdict::convergent);

    const double density = statistical_density(x, eps, n);
    c.le("density of {k : d(Delta X_k, 0) >= eps}", density, 5e-4);

    const double m = rows.infimum;
    const auto count = kernels::count_at_least(var.distances, eps / m, Execution::serial);
    c.le("eps |{k : d(Delta X_k, 0) >= eps/m}| vs V_n", eps * static_cast<double>(count), var.total(),
         "counting bound");
    ev["infimum_at"] = rows.infimum_at;
    ev["count"] = count;
    ev["density"] = density;
    ev["variation_total"] = var.total();
}

void t5_cesaro(const Params& p, Checks& c, json& ev) {
    const WeightScheme s = p.scheme();
    const index_t K = p.horizon("K", s.start());
    admissible(s, K);
    const double eps = p.number("eps");
    if (!(eps > 0)) throw ConfigError("params.eps", "must be positive");
    const FuzzySequence x = p.sequence("sequence", s.start());
    const FuzzyNumber L = p.fuzzy("limit");

    WeightScheme primed = s;
    try {
        primed = uprime(s);
    } catch (const WeightError& e) {
        throw ConfigError("params.scheme.start", e.what());
    }
    c.verdict("row sums of G(u', v) lie in l_1", row_sum_diagnostic(primed, K).verdict, Verdict::convergent);

    const auto ces = cesaro_profile(x, L, K);
    const auto first_below = std::find_if(ces.begin(), ces.end(), [&](double v) { return v < eps; });
    const bool found = first_below != ces.end();
    const index_t k0 = found ? s.start() + (first_below - ces.begin()) : K + 1;
    c.le("Cesaro distance at K", ces.back(), eps);
    const auto above = std::count_if(found ? first_below : ces.end(), ces.end(), [&](double v) { return v >= eps; });
    c.eq("Cesaro distance >= eps after k0 (count)", static_cast<double>(above), 0.0);

    const VariationReport var = variation_report(x, s, K);
    c.verdict("sequence lies in bv(u,v)", var.verdict, Verdict::convergent);

    const double dl = norm(L);
    double worst = 0.0;
    for (index_t k = std::max(k0, s.start()); k <= K; ++k) {
        const auto j = static_cast<std::size_t>(k - s.start());
        const double bound = 2.0 * (eps + dl) * std::abs(static_cast<double>(k) * s.u()(k)) *
                             std::abs(s.v_prefix(k).to_double());
        worst = std::max(worst, var.terms[j] / bound);
    }
    c.le("max_{k>=k0} t_k / (2 (eps + d(L,0)) |k u_k| |sum v_i|)", worst, 1.0);
    ev["k0"] = k0;
    ev["cesaro_at_K"] = ces.back();
    ev["variation_total"] = var.total();
}

void t6_equivalence(const Params& p, Checks& c, json& ev) {
    const WeightScheme s = p.scheme();
    const index_t K = p.horizon("K", s.start());
    admissible(s, K);
    const double B = p.number("bound");
    const FuzzySequence base = p.sequence("base", s.start());
    const FuzzySequence S = p.sequence("S", s.start());
    const FuzzySequence Sp = p.sequence("S_prime", s.start());
    const FuzzySequence X = FuzzySequence::perturbed(base, Sp);
    const FuzzySequence Y = FuzzySequence::perturbed(base, S);

    double asym = 0.0, sup_s = 0.0, gap = 0.0;
    std::size_t not_equivalent = 0;
    for (index_t i = s.start(); i <= K + 1; ++i) {
        asym = std::max({asym, midpoint_norm(S[i]), midpoint_norm(Sp[i])});
        sup_s = std::max({sup_s, norm(S[i]), norm(Sp[i])});
        gap = std::max(gap, metric_d(X[i] + S[i], Y[i] + Sp[i]));
        not_equivalent += !are_equivalent(X[i], Y[i]);
    }
    c.le("max midpoint norm of S_i, S'_i", asym, kRoundingSlack, "symmetric");
    c.le("sup d(S_i, 0), d(S'_i, 0)", sup_s, B, "bounded");
    c.le("max d(X_i + S_i, Y_i + S'_i)", gap, 1e-9);
    c.eq("indices where X_i and Y_i are not equivalent", static_cast<double>(not_equivalent), 0.0);
    c.verdict("row sums lie in l_1", row_sum_diagnostic(s, K).verdict, Verdict::convergent);

    const VariationReport vx = variation_report(X, s, K);
    const VariationReport vy = variation_report(Y, s, K);
    c.verdict("X lies in bv(u,v)", vx.verdict, Verdict::convergent);
    c.verdict("Y lies in bv(u,v)", vy.verdict, Verdict::convergent);
    c.eq("verdicts agree", vx.verdict.verdict == vy.verdict.verdict ? 1.0 : 0.0, 1.0);

    // |sum u v d(Delta Y, 0)| <= |sum u v d(0, Delta S')| + |sum u v d(Delta (Y + S'), 0)| and the mirror for X
    auto chain = [&](const FuzzySequence& lhs_seq, const FuzzySequence& shift, const VariationReport& lhs) {
        const auto shifted = FuzzySequence::perturbed(lhs_seq, shift);
        const auto a = variation_report(shift, s, K);
        const auto b = variation_report(shifted, s, K);
        double excess = 0.0;
        for (std::size_t j = 0; j < lhs.terms.size(); ++j) {
            const double rhs = a.terms[j] + b.terms[j];
            excess = std::max(excess, (lhs.terms[j] - rhs) / std::max(rhs, std::numeric_limits<double>::min()));
        }
        return excess;
    };
    c.le("termwise chain for Y (relative excess)", chain(Y, Sp, vy), kRoundingSlack);
    c.le("termwise chain for X (relative excess)", chain(X, S, vx), kRoundingSlack);
    ev["variation_X"] = vx.total();
    ev["variation_Y"] = vy.total();
}

void t7_midpoint(const Params& p, Checks& c, json& ev) {
    const index_t K = p.horizon("K", 0);
    const index_t samples = fam::integer_field(p.j, "samples", "params");
    if (samples < 1) throw ConfigError("params.samples", "must be positive");
    const auto seed = static_cast<std::uint64_t>(fam::integer_field(p.j, "seed", "params"));

    std::size_t violations = 0, members = 0, total_terms = 0;
    double worst_ratio = 0.0;
    for (index_t m = 0; m < samples; ++m) {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(m));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const auto U = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

        const WeightScheme s(RealGenerator::power(U(0.5, 2.0), 1.0, U(-4.0, -2.5)),
                             RealGenerator::power(U(0.5, 2.0), 1.0, U(-1.0, 0.0)), 0);
        const double gamma = U(1.5, 3.0), left = U(0.1, 2.0), right = U(0.1, 2.0), core = U(0.0, 1.0);
        std::vector<FuzzyNumber> values;
        double centre = U(-5.0, 5.0);
        for (index_t k = 0; k <= K + 1; ++k) {
            const double decay = std::pow(static_cast<double>(k + 1), -gamma);
            centre += U(-1.0, 1.0) * decay;
            const double c0 = core * decay, l = left * (1.0 + decay), r = right * (1.0 + 0.5 * decay);
            values.push_back(FuzzyNumber::trapezoidal(centre - c0 - l, centre - c0, centre + c0, centre + c0 + r));
        }
        const auto x = FuzzySequence::table(std::move(values), 0);
        const VariationReport full = variation_report(x, s, K);
        const VariationReport mid = midpoint_variation_report(x, s, K);
        members += full.verdict.verdict == Verdict::convergent;
        for (std::size_t j = 0; j < full.terms.size(); ++j) {
            violations += mid.terms[j] > full.terms[j];
            if (full.terms[j] > 0) worst_ratio = std::max(worst_ratio, mid.terms[j] / full.terms[j]);
        }
        total_terms += full.terms.size();
    }
    c.eq("sampled sequences classified as bv members", static_cast<double>(members), static_cast<double>(samples));
    c.eq("termwise midpoint contraction violations", static_cast<double>(violations), 0.0);
    ev["terms_checked"] = total_terms;
    ev["max_midpoint_to_full_ratio"] = worst_ratio;
}

void r2_converse(const Params& p, Checks& c, json& ev) {
    const WeightScheme s = p.scheme();
    const index_t K = p.horizon("K", s.start());
    admissible(s, K);
    const FuzzySequence x = p.sequence("sequence", s.start());

    const VariationReport mid = midpoint_variation_report(x, s, K);
    c.eq("midpoint sequence V_K", mid.total(), 0.0);
    c.verdict("midpoint sequence lies in bv(u,v)", mid.verdict, Verdict::convergent);

    const VariationReport full = variation_report(x, s, K);
    c.verdict("sequence is outside bv(u,v)", full.verdict, Verdict::divergent);
    double dev_d = 0.0, dev_t = 0.0;
    for (index_t k = s.start(); k <= K; ++k) {
        const auto j = static_cast<std::size_t>(k - s.start());
        const double kd = static_cast<double>(k);
        dev_d = std::max(dev_d, std::abs(full.distances[j] - (2 * kd + 1)));
        dev_t = std::max(dev_t, std::abs(full.terms[j] - (kd + 1) * (kd + 1)));
    }
    c.eq("max_k |d(Delta X_k, 0) - (2k+1)|", dev_d, 0.0);
    c.eq("max_k |t_k - (k+1)^2|", dev_t, 0.0);
    ev["variation_total"] = full.total();
}

}  // namespace

std::string_view to_string(ScenarioName n) noexcept {
    switch (n) {
        case ScenarioName::T2_INCLUSION: return "T2_INCLUSION";
        case ScenarioName::T2_STRICT_EX1: return "T2_STRICT_EX1";
        case ScenarioName::T3_LIMIT_PRESERVE: return "T3_LIMIT_PRESERVE";
        case ScenarioName::T4_STAT_NULL: return "T4_STAT_NULL";
        case ScenarioName::T5_CESARO: return "T5_CESARO";
        case ScenarioName::T6_EQUIVALENCE: return "T6_EQUIVALENCE";
        case ScenarioName::T7_MIDPOINT: return "T7_MIDPOINT";
        case ScenarioName::R2_CONVERSE: return "R2_CONVERSE";
    }
    return "?";
}

const std::vector<ScenarioName>& all_scenarios() {
    static const std::vector<ScenarioName> names{
        ScenarioName::T2_INCLUSION,   ScenarioName::T2_STRICT_EX1, ScenarioName::T3_LIMIT_PRESERVE,
        ScenarioName::T4_STAT_NULL,   ScenarioName::T5_CESARO,     ScenarioName::T6_EQUIVALENCE,
        ScenarioName::T7_MIDPOINT,    ScenarioName::R2_CONVERSE};
    return names;
}

ScenarioName scenario_from_string(std::string_view s) {
    for (ScenarioName n : all_scenarios()) {
        if (to_string(n) == s) return n;
    }
    throw ConfigError("scenario", "unknown scenario '" + std::string(s) + "'");
}

Scenario default_scenario(ScenarioName name, std::int64_t scale, std::uint64_t seed) {
    if (scale < 1) throw InvalidArgument("scale factor must be >= 1");
    json p;
    switch (name) {
        case ScenarioName::T2_INCLUSION:
            p = {{"sequence", crisp_seq(gen_geometric(1, 0.5))},
                 {"p", 2.0},
                 {"scheme", scheme(gen_power(1, 1, -2), gen_power(1, 1, -1), 0)},
                 {"K", 1000 * scale}};
            break;
        case ScenarioName::T2_STRICT_EX1:
            p = {{"scheme", quartic_scheme()},
                 {"sequence", unbounded_sequence()},
                 {"K", 10000 * scale},
                 {"average_from", 1000 * scale}};
            break;
        case ScenarioName::T3_LIMIT_PRESERVE:
            p = {{"scheme", quartic_scheme()},
                 {"sequence", unbounded_sequence()},
                 {"K", 1000 * scale},
                 {"n", {10, 100, 1000, 10000}}};
            break;
        case ScenarioName::T4_STAT_NULL:
            p = {{"scheme", scheme(gen_geometric(1, 0.5), gen_geometric(1, 2), 0)},
                 {"sequence", crisp_seq(gen_geometric(4.0 / 3.0, 0.25))},
                 {"eps", 0.01},
                 {"n", 10000 * scale}};
            break;
        case ScenarioName::T5_CESARO:
            p = {{"scheme", quartic_scheme()},
                 {"sequence", crisp_seq(gen_oscillating(5, 1, 1, -0.5))},
                 {"limit", {{"crisp", 5.0}}},
                 {"eps", 0.1},
                 {"K", 1000 * scale}};
            break;
        case ScenarioName::T6_EQUIVALENCE:
            p = {{"scheme", quartic_scheme()},
                 {"base", unbounded_sequence()},
                 {"S", triangular_seq(gen_oscillating(-1, -0.5, 0, 0), gen_const(0), gen_oscillating(1, 0.5, 0, 0))},
                 {"S_prime", triangular_seq(gen_oscillating(-2, -1, 1, -1), gen_const(0), gen_oscillating(2, 1, 1, -1))},
                 {"bound", 3.0},
                 {"K", 1000 * scale}};
            break;
        case ScenarioName::T7_MIDPOINT:
            p = {{"samples", 100}, {"K", 1000 * scale}, {"seed", seed}};
            break;
        case ScenarioName::R2_CONVERSE:
            p = {{"sequence", triangular_seq(gen_power(-1, 0, 1), gen_const(0), gen_power(1, 0, 1))},
                 {"scheme", scheme(gen_const(1), gen_const(1), 0)},
                 {"K", 1000 * scale}};
            break;
    }
    return {name, std::move(p)};
}

ScenarioReport run_scenario(const Scenario& sc) {
    if (!sc.params.is_object()) throw ConfigError("params", "expected an object");
    const auto t0 = std::chrono::steady_clock::now();
    Checks checks;
    json evidence = json::object();
    const Params p{sc.params};
    switch (sc.name) {
        case ScenarioName::T2_INCLUSION: t2_inclusion(p, checks, evidence); break;
        case ScenarioName::T2_STRICT_EX1: t2_strict_ex1(p, checks, evidence); break;
        case ScenarioName::T3_LIMIT_PRESERVE: t3_limit_preserve(p, checks, evidence); break;
        case ScenarioName::T4_STAT_NULL: t4_stat_null(p, checks, evidence); break;
        case ScenarioName::T5_CESARO: t5_cesaro(p, checks, evidence); break;
        case ScenarioName::T6_EQUIVALENCE: t6_equivalence(p, checks, evidence); break;
        case ScenarioName::T7_MIDPOINT: t7_midpoint(p, checks, evidence); break;
        case ScenarioName::R2_CONVERSE: r2_converse(p, checks, evidence); break;
    }
    ScenarioReport r;
    r.name = std::string(to_string(sc.name));
    r.params = sc.params;
    r.assertions = checks.take();
    r.evidence = std::move(evidence);
    r.pass = std::all_of(r.assertions.begin(), r.assertions.end(), [](const Assertion& a) { return a.pass; });
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<ScenarioReport> run_all(std::uint64_t seed, std::int64_t scale) {
    std::vector<ScenarioReport> out;
    for (ScenarioName n : all_scenarios()) out.push_back(run_scenario(default_scenario(n, scale, seed)));
    return out;
}

json to_json(const Assertion& a) {
    return {{"name", a.name},     {"measured", a.measured}, {"threshold", a.threshold},
            {"relation", a.relation}, {"pass", a.pass},     {"note", a.note}};
}

json to_json(const ScenarioReport& r) {
    json as = json::array();
    for (const auto& a : r.assertions) as.push_back(to_json(a));
    return {{"scenario", r.name}, {"params", r.params}, {"assertions", as}, {"evidence", r.evidence}, {"pass", r.pass}};
}

}  // namespace fuzzybv
