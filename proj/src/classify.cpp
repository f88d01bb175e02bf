#include "fuzzybv/classify.hpp"

#include "fuzzybv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fuzzybv {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::convergent: return "convergent";
        case Verdict::divergent: return "divergent";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict verdict_from_string(std::string_view s) {
    if (s == "convergent") return Verdict::convergent;
    if (s == "divergent") return Verdict::divergent;
    if (s == "inconclusive") return Verdict::inconclusive;
    throw InvalidArgument("unknown verdict '" + std::string(s) + "'");
}

void ClassifierPolicy::check() const {
    if (!(window > 0.0 && window < 1.0)) throw InvalidArgument("policy window must lie in (0, 1)");
    if (!(slope_margin > 0.0) || !std::isfinite(slope_margin)) {
        throw InvalidArgument("policy slope margin must be positive");
    }
    if (!(tail_tolerance >= 0.0) || !std::isfinite(tail_tolerance)) {
        throw InvalidArgument("policy tail tolerance must be non-negative");
    }
}

namespace {

double log_log_slope(std::span<const double> window, index_t first_index) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t j = 0; j < window.size(); ++j) {
        const index_t k = first_index + static_cast<index_t>(j);
        if (k < 1 || !(window[j] > 0.0)) continue;
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(window[j]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    if (n < 2 || !(denom > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

double mean(std::span<const double> xs) {
    double s = 0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

}  // namespace

SeriesVerdict classify_series(std::span<const double> terms, index_t start, const ClassifierPolicy& policy) {
    policy.check();
    if (terms.empty()) throw InvalidArgument("cannot classify an empty window");
    for (double t : terms) {
        if (std::isnan(t) || t < 0.0) throw InvalidArgument("series terms must be non-negative");
    }

    const std::size_t n = terms.size();
    const auto wsize = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::ceil(policy.window * static_cast<double>(n))), 1, n);
    const auto window = terms.subspan(n - wsize);
    const std::size_t quarter = std::max<std::size_t>(1, wsize / 4);

    SeriesVerdict out;
    out.policy = policy;
    out.horizon = start + static_cast<index_t>(n) - 1;
    out.window_begin = start + static_cast<index_t>(n - wsize);
    for (double t : terms) out.partial_sum += t;
    for (double t : window) out.tail_sum += t;
    const double first_mean = mean(window.first(quarter));
    out.term_limit = mean(window.last(quarter));
    out.slope = log_log_slope(window, out.window_begin);

    const double critical = -1.0;
    if (std::isinf(out.tail_sum) || (out.term_limit > 0.0 && out.term_limit >= first_mean)) {
        out.verdict = Verdict::divergent;
    } else if (std::isfinite(out.slope) && out.slope > critical + policy.slope_margin) {
        out.verdict = Verdict::divergent;
    } else if (std::isfinite(out.slope) && out.slope < critical - policy.slope_margin) {
        out.verdict = Verdict::convergent;
    } else if (out.tail_sum < policy.tail_tolerance) {
        out.verdict = Verdict::convergent;
    } else {
        out.verdict = Verdict::inconclusive;
    }
    return out;
}

}  // namespace fuzzybv
