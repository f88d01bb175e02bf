#pragma once

#include "fuzzybv/classify.hpp"
#include "fuzzybv/scaled_real.hpp"

#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace fuzzybv {

/// Deterministic index -> real generator built from closed-form families.
class RealGenerator {
public:
    struct Constant {
        double c = 1.0;
        bool operator==(const Constant&) const = default;
    };
    /// a * (k + s)^p
    struct Power {
        double a = 1.0, s = 0.0, p = 1.0;
        bool operator==(const Power&) const = default;
    };
    /// a * r^k
    struct Geometric {
        double a = 1.0, r = 1.0;
        bool operator==(const Geometric&) const = default;
    };
    /// c + a * (-1)^k * (k + s)^p
    struct Oscillating {
        double c = 0.0, a = 1.0, s = 0.0, p = 0.0;
        bool operator==(const Oscillating&) const = default;
    };
    /// values[k - first]
    struct Table {
        std::vector<double> values;
        index_t first = 0;
        bool operator==(const Table&) const = default;
    };
    /// k * inner(k)
    struct IndexScaled {
        std::shared_ptr<const RealGenerator> inner;
        bool operator==(const IndexScaled& o) const { return *inner == *o.inner; }
    };

    using Family = std::variant<Constant, Power, Geometric, Oscillating, Table, IndexScaled>;

    RealGenerator() : family_(Constant{}) {}
    template <class F>
        requires std::is_constructible_v<Family, F>
    RealGenerator(F f) : family_(std::move(f)) {}  // NOLINT: implicit from any family record

    static RealGenerator constant(double c) { return Constant{c}; }
    static RealGenerator power(double a, double s, double p) { return Power{a, s, p}; }
    static RealGenerator geometric(double a, double r) { return Geometric{a, r}; }
    static RealGenerator oscillating(double c, double a, double s, double p) {
        return Oscillating{c, a, s, p};
    }
    static RealGenerator table(std::vector<double> values, index_t first) {
        return Table{std::move(values), first};
    }

    const Family& family() const noexcept { return family_; }

    /// Value at k. Table lookups outside the table throw IndexError.
    double operator()(index_t k) const { return scaled(k).to_double(); }

    /// Value at k carrying its own exponent, so a * r^k stays exact for huge k.
    ScaledReal scaled(index_t k) const;

    /// The generator of k * g(k); closed form kept where one exists.
    RealGenerator index_scaled() const;

    bool operator==(const RealGenerator&) const = default;

private:
    Family family_;
};

/// The pair (u, v) defining the factorable matrix with row sums u_k * sum_{i<=k} v_i.
///
/// Copies share a memo of scaled prefix sums of v; the memo only ever holds values
/// that a fresh computation would produce, and it is safe to read concurrently.
class WeightScheme {
public:
    WeightScheme(RealGenerator u, RealGenerator v, index_t start = 0);

    const RealGenerator& u() const noexcept { return u_; }
    const RealGenerator& v() const noexcept { return v_; }
    index_t start() const noexcept { return start_; }

    /// Throws WeightError when some u_k or v_k on [start, horizon] is zero or non-finite.
    void check_admissible(index_t horizon) const;

    /// sum_{i=start}^{k} v_i (memoized)
    ScaledReal v_prefix(index_t k) const;

    ScaledReal row_sum_scaled(index_t k) const;
    double row_sum(index_t k) const { return row_sum_scaled(k).to_double(); }

    bool operator==(const WeightScheme& o) const {
        return u_ == o.u_ && v_ == o.v_ && start_ == o.start_;
    }

private:
    struct PrefixMemo;

    void check_index(index_t k) const;

    RealGenerator u_;
    RealGenerator v_;
    index_t start_;
    std::shared_ptr<PrefixMemo> memo_;
};

/// u'_k = k * u_k with the same v. Rejects start 0, where u'_0 = 0 leaves U.
WeightScheme uprime(const WeightScheme& s);

struct RowSumDiagnostic {
    index_t start = 0;
    index_t horizon = 0;
    std::vector<double> row_sums;       ///< r_k for k in [start, horizon]
    std::vector<double> cumulative_abs; ///< sum_{j<=k} |r_j|
    double abs_sum = 0.0;
    double infimum = 0.0;               ///< min |r_k| over the horizon
    index_t infimum_at = 0;
    SeriesVerdict verdict;              ///< classification of |r_k| (l1 membership)
};

RowSumDiagnostic row_sum_diagnostic(const WeightScheme& s, index_t horizon,
                                    const ClassifierPolicy& policy = {});

/// y_k = u_k * sum_{i=start}^{k} v_i x_i for k in [start, horizon]; x[j] holds x_{start+j}.
std::vector<double> apply_factorable(const WeightScheme& s, std::span<const double> x, index_t horizon);

}  // namespace fuzzybv
