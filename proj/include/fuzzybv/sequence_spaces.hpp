#pragma once

#include "fuzzybv/classify.hpp"
#include "fuzzybv/fuzzy_sequence.hpp"
#include "fuzzybv/kernels.hpp"
#include "fuzzybv/weighted_mean.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace fuzzybv {

/// (Delta X)_k = X_k - X_{k+1}
FuzzySequence delta(const FuzzySequence& x);

/// d(Delta X_k, 0)
double delta_distance(const FuzzySequence& x, index_t k);

/// Truncated bounded-variation sum sum_k |u_k sum_{i<=k} v_i d_i| and its per-k pieces.
/// All vectors are indexed by k - start.
struct VariationReport {
    index_t start = 0;
    index_t horizon = 0;
    std::vector<double> distances;  ///< d_k
    std::vector<double> inner;      ///< sum_{i=start}^{k} v_i d_i
    std::vector<double> terms;      ///< t_k = |u_k * inner_k|
    std::vector<double> partial;    ///< V_k = sum_{j<=k} t_j
    SeriesVerdict verdict;

    double total() const noexcept { return partial.empty() ? 0.0 : partial.back(); }
};

/// The variation recurrence over precomputed distances d_k, k in [s.start(), horizon].
VariationReport variation_from_distances(std::span<const double> distances, const WeightScheme& s,
                                         index_t horizon, const ClassifierPolicy& policy = {});

/// Variation of X with d_k = d(Delta X_k, 0).
VariationReport variation_report(const FuzzySequence& x, const WeightScheme& s, index_t horizon,
                                 const ClassifierPolicy& policy = {},
                                 Execution exec = Execution::parallel);

/// Variation of the midpoint sequence (X_{M,k}).
VariationReport midpoint_variation_report(const FuzzySequence& x, const WeightScheme& s, index_t horizon,
                                          const ClassifierPolicy& policy = {},
                                          Execution exec = Execution::parallel);

/// Truncated metric |u_s v_s d(X_s, Y_s)| + sum_k |u_k sum_i v_i d(Delta X_i, Delta Y_i)|.
double bv_metric_D(const FuzzySequence& x, const FuzzySequence& y, const WeightScheme& s, index_t horizon,
                   Execution exec = Execution::parallel);

/// d(X_s, Y_s) + max_{i<=K} d(Delta X_i, Delta Y_i)
double c_delta_metric_rho(const FuzzySequence& x, const FuzzySequence& y, index_t horizon,
                          Execution exec = Execution::parallel);

struct LpPartial {
    double p = 1.0;
    std::vector<double> terms;  ///< d(X_k, 0)^p
    double sum = 0.0;
    SeriesVerdict verdict;
};

/// sum_{k<=K} d(X_k, 0)^p. Throws InvalidArgument for p < 1.
LpPartial lp_partial(const FuzzySequence& x, double p, index_t horizon, const ClassifierPolicy& policy = {},
                     Execution exec = Execution::parallel);

enum class Growth { bounded, growing, inconclusive };
std::string_view to_string(Growth g) noexcept;

struct SupNormPartial {
    std::vector<double> norms;        ///< d(X_k, 0)
    std::vector<double> running_sup;  ///< max_{j<=k} d(X_j, 0)
    double sup = 0.0;
    Growth growth = Growth::inconclusive;
    SeriesVerdict increments;         ///< classification of the running-sup increments
};

SupNormPartial sup_norm_partial(const FuzzySequence& x, index_t horizon, const ClassifierPolicy& policy = {},
                                Execution exec = Execution::parallel);

/// Fraction of k in [start, n] with d(Delta X_k, 0) >= eps.
double statistical_density(const FuzzySequence& x, double eps, index_t n,
                           Execution exec = Execution::parallel);

/// Running counts |{k <= n : d(Delta X_k, 0) >= eps}| for every n in [start, horizon].
std::vector<std::size_t> density_counts(const FuzzySequence& x, double eps, index_t horizon,
                                        Execution exec = Execution::parallel);

/// Mean of d(X_i, L) over i in [start, k], normalized by the element count.
double cesaro_distance(const FuzzySequence& x, const FuzzyNumber& limit, index_t k,
                       Execution exec = Execution::parallel);

/// cesaro_distance for every k in [start, horizon].
std::vector<double> cesaro_profile(const FuzzySequence& x, const FuzzyNumber& limit, index_t horizon,
                                   Execution exec = Execution::parallel);

}  // namespace fuzzybv
