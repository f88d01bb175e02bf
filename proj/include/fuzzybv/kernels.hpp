#pragma once

#include "fuzzybv/fuzzy_sequence.hpp"

#include <functional>
#include <span>
#include <vector>

namespace fuzzybv {

/// serial is the reference path; parallel must reproduce it bit for bit.
enum class Execution { serial, parallel };

namespace kernels {

/// f(k) for k in [first, last]. With Execution::parallel the indices are split across
/// OpenMP threads; an exception from any index is rethrown on the calling thread.
std::vector<double> tabulate(index_t first, index_t last, const std::function<double(index_t)>& f,
                             Execution exec);

/// d(X_k - X_{k+1}, 0)
std::vector<double> delta_norms(const FuzzySequence& x, index_t first, index_t last, Execution exec);

/// sup_alpha |midpoint(X_k)(alpha) - midpoint(X_{k+1})(alpha)|, the delta distances of the
/// midpoint sequence. Computed as the midpoint norm of X_k - X_{k+1}, which keeps
/// d((Delta X)_M, 0) <= d(Delta X, 0) exact under rounding.
std::vector<double> midpoint_delta_norms(const FuzzySequence& x, index_t first, index_t last,
                                         Execution exec);

/// d(X_k - X_{k+1}, Y_k - Y_{k+1})
std::vector<double> delta_distances(const FuzzySequence& x, const FuzzySequence& y, index_t first,
                                    index_t last, Execution exec);

/// d(X_k, 0)
std::vector<double> norms(const FuzzySequence& x, index_t first, index_t last, Execution exec);

/// d(X_k, target)
std::vector<double> distances_to(const FuzzySequence& x, const FuzzyNumber& target, index_t first,
                                 index_t last, Execution exec);

/// |{j : values[j] >= threshold}|
std::size_t count_at_least(std::span<const double> values, double threshold, Execution exec);

}  // namespace kernels
}  // namespace fuzzybv
