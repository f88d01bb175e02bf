#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace fuzzybv {

using index_t = std::int64_t;

enum class Verdict { convergent, divergent, inconclusive };

std::string_view to_string(Verdict v) noexcept;
Verdict verdict_from_string(std::string_view s);

/// Finite-horizon heuristics for "sum of terms < infinity".
struct ClassifierPolicy {
    double window = 0.5;        ///< trailing fraction of [start, K] that is examined
    double slope_margin = 0.1;  ///< delta around the critical log-log slope -1
    double tail_tolerance = 1e-8;

    void check() const;  // throws InvalidArgument
    bool operator==(const ClassifierPolicy&) const = default;
};

/// Outcome of classify_series plus the numbers it was decided from.
struct SeriesVerdict {
    Verdict verdict = Verdict::inconclusive;
    double slope = 0.0;      ///< least-squares slope of log t_k on log k over the window; NaN if unfit
    double tail_sum = 0.0;   ///< sum of terms over the window
    double term_limit = 0.0; ///< mean of the last quarter of the window
    double partial_sum = 0.0;
    index_t window_begin = 0;
    index_t horizon = 0;
    ClassifierPolicy policy;
};

/// Classifies non-negative terms t_k, k in [start, start + terms.size() - 1].
///
/// divergent: the terms do not shrink over the window (last-quarter mean >= first-quarter
///            mean > 0), or the fitted slope exceeds -1 + margin;
/// convergent: the slope is below -1 - margin, or the window's tail sum is below tolerance;
/// inconclusive otherwise.
SeriesVerdict classify_series(std::span<const double> terms, index_t start,
                              const ClassifierPolicy& policy = {});

}  // namespace fuzzybv
