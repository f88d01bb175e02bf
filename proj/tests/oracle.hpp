#pragma once

// Independent reference computations for tests: closed-form cut bounds of
// trapezoidal numbers evaluated on a dense uniform alpha grid. Nothing here
// calls into the envelope interpolation or breakpoint merging of the library.

#include "fuzzybv/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace oracle {

inline constexpr int kDenseLevels = 100000;

/// Trapezoid a <= b <= c <= d (triangular when b == c).
struct Trap {
    double a, b, c, d;

    double lower(double alpha) const { return a + alpha * (b - a); }
    double upper(double alpha) const { return d - alpha * (d - c); }
    fuzzybv::FuzzyNumber number() const { return fuzzybv::FuzzyNumber::trapezoidal(a, b, c, d); }
};

using Bound = std::function<double(double)>;

/// Closed-form cut bounds of some derived quantity.
struct Cuts {
    Bound lower, upper;
};

inline Cuts cuts(const Trap& t) {
    return {[t](double al) { return t.lower(al); }, [t](double al) { return t.upper(al); }};
}

inline double alpha_at(int j) { return static_cast<double>(j) / kDenseLevels; }

/// sup over the dense grid of max(|lower difference|, |upper difference|).
inline double dense_distance(const Cuts& x, const Cuts& y) {
    double d = 0.0;
    for (int j = 0; j <= kDenseLevels; ++j) {
        const double al = alpha_at(j);
        d = std::max({d, std::abs(x.lower(al) - y.lower(al)), std::abs(x.upper(al) - y.upper(al))});
    }
    return d;
}

/// Largest deviation between a library result and closed-form cuts on the dense grid.
inline double dense_deviation(const fuzzybv::FuzzyNumber& got, const Cuts& want) {
    double d = 0.0;
    for (int j = 0; j <= kDenseLevels; ++j) {
        const double al = alpha_at(j);
        d = std::max({d, std::abs(got.lower_at(al) - want.lower(al)),
                      std::abs(got.upper_at(al) - want.upper(al))});
    }
    return d;
}

inline Cuts add(const Cuts& x, const Cuts& y) {
    return {[=](double al) { return x.lower(al) + y.lower(al); },
            [=](double al) { return x.upper(al) + y.upper(al); }};
}

inline Cuts sub(const Cuts& x, const Cuts& y) {
    return {[=](double al) { return x.lower(al) - y.upper(al); },
            [=](double al) { return x.upper(al) - y.lower(al); }};
}

inline Cuts scale(double c, const Cuts& x) {
    if (c >= 0) {
        return {[=](double al) { return c * x.lower(al); }, [=](double al) { return c * x.upper(al); }};
    }
    return {[=](double al) { return c * x.upper(al); }, [=](double al) { return c * x.lower(al); }};
}

/// Random triangular (half the time) or trapezoidal number with centre in [-10, 10].
inline Trap random_trap(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> centre(-10.0, 10.0), spread(0.0, 5.0), coin(0.0, 1.0);
    const double m = centre(rng);
    const double left = spread(rng), right = spread(rng);
    const double core = coin(rng) < 0.5 ? 0.0 : spread(rng) / 2.0;
    const double b = m - core / 2.0, c = m + core / 2.0;
    return {b - left, b, c, c + right};
}

/// Three-level envelope bent at an interior level beta. beta is a dense-grid level, so the
/// dense sup of any difference involving it is attained on the grid.
struct Bent {
    double beta;
    double l0, lb, l1, u0, ub, u1;

    static double piece(double al, double beta, double v0, double vb, double v1) {
        return al <= beta ? v0 + (vb - v0) * (al / beta) : vb + (v1 - vb) * ((al - beta) / (1.0 - beta));
    }
    double lower(double al) const { return piece(al, beta, l0, lb, l1); }
    double upper(double al) const { return piece(al, beta, u0, ub, u1); }
    fuzzybv::FuzzyNumber number() const {
        return fuzzybv::FuzzyNumber::from_envelope({0.0, beta, 1.0}, {l0, lb, l1}, {u0, ub, u1});
    }
};

inline Cuts cuts(const Bent& t) {
    return {[t](double al) { return t.lower(al); }, [t](double al) { return t.upper(al); }};
}

inline Bent random_bent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> level(1, kDenseLevels - 1);
    std::uniform_real_distribution<double> centre(-10.0, 10.0), step(0.0, 3.0);
    const double m = centre(rng);
    const double l1 = m - step(rng) / 4, u1 = m + step(rng) / 4;
    const double lb = l1 - step(rng), ub = u1 + step(rng);
    return {alpha_at(level(rng)), lb - step(rng), lb, l1, ub + step(rng), ub, u1};
}

}  // namespace oracle
