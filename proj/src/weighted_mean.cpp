#include "fuzzybv/weighted_mean.hpp"

#include "fuzzybv/errors.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace fuzzybv {

namespace {

ScaledReal power_term(double a, double base, double p) {
    const double v = a * std::pow(base, p);
    if (std::isnormal(v) || a == 0.0 || (base == 0.0 && p > 0.0)) return ScaledReal::from_double(v);
    if (base > 0.0 && std::isfinite(a) && std::isfinite(p)) {
        return ScaledReal::from_log2(std::log2(std::abs(a)) + p * std::log2(base), a < 0.0 ? -1.0 : 1.0);
    }
    return ScaledReal::from_double(v);
}

}  // namespace

ScaledReal RealGenerator::scaled(index_t k) const {
    const auto kd = static_cast<double>(k);
    return std::visit(
        [&](const auto& f) -> ScaledReal {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, Constant>) {
                return ScaledReal::from_double(f.c);
            } else if constexpr (std::is_same_v<F, Power>) {
                return power_term(f.a, kd + f.s, f.p);
            } else if constexpr (std::is_same_v<F, Geometric>) {
                if (k < 0) throw IndexError("geometric generator needs k >= 0");
                return ScaledReal::from_double(f.a) *
                       ScaledReal::pow(ScaledReal::from_double(f.r), static_cast<std::uint64_t>(k));
            } else if constexpr (std::is_same_v<F, Oscillating>) {
                const double sign = (k % 2 == 0) ? 1.0 : -1.0;
                return ScaledReal::from_double(f.c + sign * f.a * std::pow(kd + f.s, f.p));
            } else if constexpr (std::is_same_v<F, Table>) {
                const index_t j = k - f.first;
                if (j < 0 || j >= static_cast<index_t>(f.values.size())) {
                    throw IndexError("index " + std::to_string(k) + " outside table");
                }
                return ScaledReal::from_double(f.values[static_cast<std::size_t>(j)]);
            } else {
                return ScaledReal::from_double(kd) * f.inner->scaled(k);
            }
        },
        family_);
}

RealGenerator RealGenerator::index_scaled() const {
    if (const auto* p = std::get_if<Power>(&family_); p && p->s == 0.0) {
        return Power{p->a, 0.0, p->p + 1.0};
    }
    if (const auto* c = std::get_if<Constant>(&family_)) return Power{c->c, 0.0, 1.0};
    return IndexScaled{std::make_shared<const RealGenerator>(*this)};
}

struct WeightScheme::PrefixMemo {
    std::mutex mutex;
    std::vector<ScaledReal> prefix;
};

WeightScheme::WeightScheme(RealGenerator u, RealGenerator v, index_t start)
    : u_(std::move(u)), v_(std::move(v)), start_(start), memo_(std::make_shared<PrefixMemo>()) {
    if (start < 0) throw InvalidArgument("start index must be non-negative");
}

void WeightScheme::check_index(index_t k) const {
    if (k < start_) {
        throw IndexError("index " + std::to_string(k) + " below start " + std::to_string(start_));
    }
}

void WeightScheme::check_admissible(index_t horizon) const {
    for (index_t k = start_; k <= horizon; ++k) {
        const ScaledReal uk = u_.scaled(k), vk = v_.scaled(k);
        if (uk.is_zero() || !uk.is_finite()) {
            throw WeightError("u_" + std::to_string(k) + " is zero or non-finite; weights must lie in U");
        }
        if (vk.is_zero() || !vk.is_finite()) {
            throw WeightError("v_" + std::to_string(k) + " is zero or non-finite; weights must lie in U");
        }
    }
}

ScaledReal WeightScheme::v_prefix(index_t k) const {
    check_index(k);
    const auto j = static_cast<std::size_t>(k - start_);
    std::lock_guard lock(memo_->mutex);
    auto& prefix = memo_->prefix;
    while (prefix.size() <= j) {
        const index_t next = start_ + static_cast<index_t>(prefix.size());
        const ScaledReal term = v_.scaled(next);
        prefix.push_back(prefix.empty() ? term : prefix.back() + term);
    }
    return prefix[j];
}

ScaledReal WeightScheme::row_sum_scaled(index_t k) const { return u_.scaled(k) * v_prefix(k); }

WeightScheme uprime(const WeightScheme& s) {
    if (s.start() == 0) {
        throw WeightError("u'_0 = 0 * u_0 = 0 leaves U; uprime needs start index >= 1");
    }
    return WeightScheme(s.u().index_scaled(), s.v(), s.start());
}

RowSumDiagnostic row_sum_diagnostic(const WeightScheme& s, index_t horizon, const ClassifierPolicy& policy) {
    if (horizon < s.start()) throw IndexError("horizon below start index");
    RowSumDiagnostic d;
    d.start = s.start();
    d.horizon = horizon;
    const auto n = static_cast<std::size_t>(horizon - s.start() + 1);
    d.row_sums.reserve(n);
    d.cumulative_abs.reserve(n);
    std::vector<double> magnitudes;
    magnitudes.reserve(n);
    d.infimum = HUGE_VAL;
    for (index_t k = s.start(); k <= horizon; ++k) {
        const double r = s.row_sum(k);
        d.row_sums.push_back(r);
        magnitudes.push_back(std::abs(r));
        d.abs_sum += std::abs(r);
        d.cumulative_abs.push_back(d.abs_sum);
        if (std::abs(r) < d.infimum) {
            d.infimum = std::abs(r);
            d.infimum_at = k;
        }
    }
    d.verdict = classify_series(magnitudes, s.start(), policy);
    return d;
}

std::vector<double> apply_factorable(const WeightScheme& s, std::span<const double> x, index_t horizon) {
    if (horizon < s.start()) throw IndexError("horizon below start index");
    const auto n = static_cast<std::size_t>(horizon - s.start() + 1);
    if (x.size() < n) throw IndexError("input sequence shorter than the horizon");
    std::vector<double> y;
    y.reserve(n);
    ScaledReal running;
    for (std::size_t j = 0; j < n; ++j) {
        const index_t k = s.start() + static_cast<index_t>(j);
        running += s.v().scaled(k) * ScaledReal::from_double(x[j]);
        y.push_back((s.u().scaled(k) * running).to_double());
    }
    return y;
}

}  // namespace fuzzybv
