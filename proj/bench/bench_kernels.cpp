// Serial reference vs OpenMP kernels on the distance tabulations.
//
//   bench_kernels [K] [repeats]

#include "fuzzybv/kernels.hpp"
#include "fuzzybv/sequence_spaces.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace fuzzybv;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const index_t K = argc > 1 ? std::atoll(argv[1]) : 200000;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;

    // trapezoids with a wobbling centre, so every delta has four breakpoints
    const auto x = FuzzySequence::custom("bench", [](index_t k) {
        const double c = std::sin(0.001 * static_cast<double>(k)), w = 1.0 + 1.0 / static_cast<double>(k + 1);
        return FuzzyNumber::trapezoidal(c - 2 * w, c - w, c + w, c + 3 * w);
    });
    const auto limit = FuzzyNumber::triangular(-1, 0, 1);

    struct Case {
        const char* name;
        std::function<std::vector<double>(Execution)> run;
    };
    const Case cases[] = {
        {"delta_norms", [&](Execution e) { return kernels::delta_norms(x, 0, K, e); }},
        {"midpoint_delta_norms", [&](Execution e) { return kernels::midpoint_delta_norms(x, 0, K, e); }},
        {"norms", [&](Execution e) { return kernels::norms(x, 0, K, e); }},
        {"distances_to", [&](Execution e) { return kernels::distances_to(x, limit, 0, K, e); }},
    };

    std::printf("K = %lld, threads = %d, best of %d\n", static_cast<long long>(K), omp_get_max_threads(), repeats);
    std::printf("%-22s %12s %12s %8s %s\n", "kernel", "serial [s]", "parallel [s]", "speedup", "identical");
    for (const auto& c : cases) {
        std::vector<double> a, b;
        const double ts = best_of(repeats, [&] { a = c.run(Execution::serial); });
        const double tp = best_of(repeats, [&] { b = c.run(Execution::parallel); });
        std::printf("%-22s %12.4f %12.4f %8.2f %s\n", c.name, ts, tp, ts / tp, a == b ? "yes" : "NO");
    }
    return 0;
}
