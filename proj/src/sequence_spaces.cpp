#include "fuzzybv/sequence_spaces.hpp"

#include "fuzzybv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzybv {

namespace {

void check_horizon(index_t start, index_t horizon) {
    if (horizon < start) {
        throw IndexError("horizon " + std::to_string(horizon) + " below start " + std::to_string(start));
    }
}

void check_same_start(index_t a, index_t b, const char* what) {
    if (a != b) {
        throw ConfigError("start", std::string(what) + " start indices differ (" + std::to_string(a) +
                                       " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

FuzzySequence delta(const FuzzySequence& x) {
    return FuzzySequence::custom("delta(" + x.family() + ")",
                                 [x](index_t k) { return sub(x[k], x[k + 1]); }, x.start());
}

double delta_distance(const FuzzySequence& x, index_t k) { return norm(sub(x[k], x[k + 1])); }

VariationReport variation_from_distances(std::span<const double> distances, const WeightScheme& s,
                                         index_t horizon, const ClassifierPolicy& policy) {
    check_horizon(s.start(), horizon);
    const auto n = static_cast<std::size_t>(horizon - s.start() + 1);
    if (distances.size() < n) throw IndexError("fewer distances than the horizon requires");

    VariationReport r;
    r.start = s.start();
    r.horizon = horizon;
    r.distances.assign(distances.begin(), distances.begin() + static_cast<std::ptrdiff_t>(n));
    r.inner.reserve(n);
    r.terms.reserve(n);
    r.partial.reserve(n);

    ScaledReal inner;
    double running = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const index_t k = s.start() + static_cast<index_t>(j);
        inner += s.v().scaled(k) * ScaledReal::from_double(distances[j]);
        // the absolute value sits outside the inner sum
        const double t = (s.u().scaled(k) * inner).abs().to_double();
        running += t;
        r.inner.push_back(inner.to_double());
        r.terms.push_back(t);
        r.partial.push_back(running);
    }
    r.verdict = classify_series(r.terms, s.start(), policy);
    return r;
}

VariationReport variation_report(const FuzzySequence& x, const WeightScheme& s, index_t horizon,
                                 const ClassifierPolicy& policy, Execution exec) {
    check_same_start(x.start(), s.start(), "sequence and scheme");
    check_horizon(s.start(), horizon);
    const auto d = kernels::delta_norms(x, s.start(), horizon, exec);
    return variation_from_distances(d, s, horizon, policy);
}

VariationReport midpoint_variation_report(const FuzzySequence& x, const WeightScheme& s, index_t horizon,
                                          const ClassifierPolicy& policy, Execution exec) {
    check_same_start(x.start(), s.start(), "sequence and scheme");
    check_horizon(s.start(), horizon);
    const auto d = kernels::midpoint_delta_norms(x, s.start(), horizon, exec);
    return variation_from_distances(d, s, horizon, policy);
}

double bv_metric_D(const FuzzySequence& x, const FuzzySequence& y, const WeightScheme& s, index_t horizon,
                   Execution exec) {
    check_same_start(x.start(), y.start(), "sequences");
    check_same_start(x.start(), s.start(), "sequence and scheme");
    check_horizon(s.start(), horizon);
    const index_t s0 = s.start();
    const double lead =
        (s.u().scaled(s0) * s.v().scaled(s0) * ScaledReal::from_double(metric_d(x[s0], y[s0])))
            .abs()
            .to_double();
    const auto d = kernels::delta_distances(x, y, s0, horizon, exec);
    double sum = 0.0;
    ScaledReal inner;
    for (std::size_t j = 0; j < d.size(); ++j) {
        const index_t k = s0 + static_cast<index_t>(j);
        inner += s.v().scaled(k) * ScaledReal::from_double(d[j]);
        sum += (s.u().scaled(k) * inner).abs().to_double();
    }
    return lead + sum;
}

double c_delta_metric_rho(const FuzzySequence& x, const FuzzySequence& y, index_t horizon, Execution exec) {
    check_same_start(x.start(), y.start(), "sequences");
    check_horizon(x.start(), horizon);
    const auto d = kernels::delta_distances(x, y, x.start(), horizon, exec);
    return metric_d(x[x.start()], y[x.start()]) + *std::max_element(d.begin(), d.end());
}

LpPartial lp_partial(const FuzzySequence& x, double p, index_t horizon, const ClassifierPolicy& policy,
                     Execution exec) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidArgument("p must be a finite value >= 1");
    check_horizon(x.start(), horizon);
    LpPartial out;
    out.p = p;
    out.terms = kernels::norms(x, x.start(), horizon, exec);
    for (double& t : out.terms) {
        t = std::pow(t, p);
        out.sum += t;
    }
    out.verdict = classify_series(out.terms, x.start(), policy);
    return out;
}

std::string_view to_string(Growth g) noexcept {
    switch (g) {
        case Growth::bounded: return "bounded";
        case Growth::growing: return "growing";
        case Growth::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

SupNormPartial sup_norm_partial(const FuzzySequence& x, index_t horizon, const ClassifierPolicy& policy,
                                Execution exec) {
    check_horizon(x.start(), horizon);
    SupNormPartial out;
    out.norms = kernels::norms(x, x.start(), horizon, exec);
    std::vector<double> increments;
    increments.reserve(out.norms.size());
    double sup = 0.0;
    for (std::size_t j = 0; j < out.norms.size(); ++j) {
        const double next = j == 0 ? out.norms[0] : std::max(sup, out.norms[j]);
        increments.push_back(j == 0 ? 0.0 : next - sup);
        sup = next;
        out.running_sup.push_back(sup);
    }
    out.sup = sup;
    out.increments = classify_series(increments, x.start(), policy);
    switch (out.increments.verdict) {
        case Verdict::convergent: out.growth = Growth::bounded; break;
        case Verdict::divergent: out.growth = Growth::growing; break;
        case Verdict::inconclusive: out.growth = Growth::inconclusive; break;
    }
    return out;
}

namespace {
void check_eps(double eps) {
    if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
}
}  // namespace

double statistical_density(const FuzzySequence& x, double eps, index_t n, Execution exec) {
    check_eps(eps);
    check_horizon(x.start(), n);
    const auto d = kernels::delta_norms(x, x.start(), n, exec);
    return static_cast<double>(kernels::count_at_least(d, eps, exec)) / static_cast<double>(d.size());
}

std::vector<std::size_t> density_counts(const FuzzySequence& x, double eps, index_t horizon, Execution exec) {
    check_eps(eps);
    check_horizon(x.start(), horizon);
    const auto d = kernels::delta_norms(x, x.start(), horizon, exec);
    std::vector<std::size_t> counts;
    counts.reserve(d.size());
    std::size_t c = 0;
    for (double v : d) {
        c += v >= eps;
        counts.push_back(c);
    }
    return counts;
}

double cesaro_distance(const FuzzySequence& x, const FuzzyNumber& limit, index_t k, Execution exec) {
    check_horizon(x.start(), k);
    const auto d = kernels::distances_to(x, limit, x.start(), k, exec);
    double s = 0.0;
    for (double v : d) s += v;
    return s / static_cast<double>(d.size());
}

std::vector<double> cesaro_profile(const FuzzySequence& x, const FuzzyNumber& limit, index_t horizon,
                                   Execution exec) {
    check_horizon(x.start(), horizon);
    auto d = kernels::distances_to(x, limit, x.start(), horizon, exec);
    double s = 0.0;
    for (std::size_t j = 0; j < d.size(); ++j) {
        s += d[j];
        d[j] = s / static_cast<double>(j + 1);
    }
    return d;
}

}  // namespace fuzzybv
