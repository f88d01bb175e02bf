#include "fuzzybv/kernels.hpp"

#include "fuzzybv/errors.hpp"

#include <exception>

namespace fuzzybv::kernels {

std::vector<double> tabulate(index_t first, index_t last, const std::function<double(index_t)>& f,
                             Execution exec) {
    if (last < first) return {};
    const auto n = static_cast<std::int64_t>(last - first + 1);
    std::vector<double> out(static_cast<std::size_t>(n));

    if (exec == Execution::serial) {
        for (std::int64_t j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = f(first + j);
        return out;
    }

    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < n; ++j) {
        try {
            out[static_cast<std::size_t>(j)] = f(first + j);
        } catch (...) {
#pragma omp critical(fuzzybv_kernel_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<double> delta_norms(const FuzzySequence& x, index_t first, index_t last, Execution exec) {
    return tabulate(first, last, [&](index_t k) { return norm(sub(x[k], x[k + 1])); }, exec);
}

std::vector<double> midpoint_delta_norms(const FuzzySequence& x, index_t first, index_t last,
                                         Execution exec) {
    // (X_M)_k - (X_M)_{k+1} equals the midpoint function of X_k - X_{k+1}
    return tabulate(first, last, [&](index_t k) { return midpoint_norm(sub(x[k], x[k + 1])); }, exec);
}

std::vector<double> delta_distances(const FuzzySequence& x, const FuzzySequence& y, index_t first,
                                    index_t last, Execution exec) {
    return tabulate(
        first, last, [&](index_t k) { return metric_d(sub(x[k], x[k + 1]), sub(y[k], y[k + 1])); },
        exec);
}

std::vector<double> norms(const FuzzySequence& x, index_t first, index_t last, Execution exec) {
    return tabulate(first, last, [&](index_t k) { return norm(x[k]); }, exec);
}

std::vector<double> distances_to(const FuzzySequence& x, const FuzzyNumber& target, index_t first,
                                 index_t last, Execution exec) {
    return tabulate(first, last, [&](index_t k) { return metric_d(x[k], target); }, exec);
}

std::size_t count_at_least(std::span<const double> values, double threshold, Execution exec) {
    const auto n = static_cast<std::int64_t>(values.size());
    std::int64_t count = 0;
    if (exec == Execution::serial) {
        for (std::int64_t j = 0; j < n; ++j) count += values[static_cast<std::size_t>(j)] >= threshold;
        return static_cast<std::size_t>(count);
    }
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::int64_t j = 0; j < n; ++j) count += values[static_cast<std::size_t>(j)] >= threshold;
    return static_cast<std::size_t>(count);
}

}  // namespace fuzzybv::kernels
