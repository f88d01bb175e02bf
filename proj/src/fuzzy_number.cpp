#include "fuzzybv/fuzzy_number.hpp"

#include "fuzzybv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fuzzybv {

namespace {

// Sequential evaluator of a piecewise-linear function for non-decreasing queries.
class Cursor {
public:
    Cursor(std::span<const double> levels, std::span<const double> values)
        : levels_(levels), values_(values) {}

    double operator()(double alpha) {
        while (seg_ + 2 < levels_.size() && levels_[seg_ + 1] < alpha) ++seg_;
        return interpolate(seg_, alpha);
    }

private:
    double interpolate(std::size_t j, double alpha) const {
        const double l0 = levels_[j], l1 = levels_[j + 1];
        const double v0 = values_[j], v1 = values_[j + 1];
        if (alpha <= l0) return v0;
        if (alpha >= l1) return v1;
        const double v = v0 + (alpha - l0) / (l1 - l0) * (v1 - v0);
        return std::clamp(v, std::min(v0, v1), std::max(v0, v1));
    }

    std::span<const double> levels_;
    std::span<const double> values_;
    std::size_t seg_ = 0;
};

double evaluate(std::span<const double> levels, std::span<const double> values, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw InvalidArgument("alpha must lie in [0, 1]");
    }
    const auto it = std::upper_bound(levels.begin(), levels.end(), alpha);
    const std::size_t hi = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - levels.begin(), 1),
                                                  levels.size() - 1);
    Cursor c(levels.subspan(hi - 1, 2), values.subspan(hi - 1, 2));
    return c(alpha);
}

std::vector<double> union_levels(std::span<const double> a, std::span<const double> b) {
    std::vector<double> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<double> resample(std::span<const double> levels, std::span<const double> values,
                             std::span<const double> grid) {
    std::vector<double> out;
    out.reserve(grid.size());
    Cursor c(levels, values);
    for (double g : grid) out.push_back(c(g));
    return out;
}

// Visits every breakpoint of the merged grid with the interpolated bounds of both numbers.
template <typename Fn>
void for_each_merged(const FuzzyNumber& x, const FuzzyNumber& y, Fn&& fn) {
    const auto lx = x.levels(), ly = y.levels();
    Cursor xlo(lx, x.lower()), xhi(lx, x.upper()), ylo(ly, y.lower()), yhi(ly, y.upper());
    std::size_t i = 0, j = 0;
    while (i < lx.size() || j < ly.size()) {
        double a;
        if (j == ly.size() || (i < lx.size() && lx[i] < ly[j])) {
            a = lx[i++];
        } else if (i == lx.size() || ly[j] < lx[i]) {
            a = ly[j++];
        } else {
            a = lx[i];
            ++i;
            ++j;
        }
        double xl = xlo(a), xh = xhi(a), yl = ylo(a), yh = yhi(a);
        // Interpolating a nearly-degenerate cut can invert it by an ulp.
        if (xl > xh) xl = xh = (xl + xh) / 2.0;
        if (yl > yh) yl = yh = (yl + yh) / 2.0;
        fn(a, xl, xh, yl, yh);
    }
}

std::string describe_index(const char* what, std::size_t j) {
    std::ostringstream os;
    os << what << " at breakpoint " << j;
    return os.str();
}

}  // namespace

std::string_view Validation::label() const noexcept {
    switch (condition) {
        case Condition::none: return "ok";
        case Condition::shape: return "shape";
        case Condition::lower_monotone: return "(i)";
        case Condition::upper_monotone: return "(ii)";
        case Condition::grid: return "(iii)";
        case Condition::core_order: return "(iv)";
    }
    return "?";
}

Validation validate(std::span<const double> levels, std::span<const double> lower,
                    std::span<const double> upper) {
    if (levels.size() != lower.size() || levels.size() != upper.size()) {
        return {Condition::shape, "levels, lower and upper must have the same length"};
    }
    if (levels.size() < 2) {
        return {Condition::shape, "at least the levels 0 and 1 are required"};
    }
    for (std::size_t j = 0; j < levels.size(); ++j) {
        if (!std::isfinite(levels[j])) return {Condition::grid, describe_index("non-finite level", j)};
    }
    if (levels.front() != 0.0) return {Condition::grid, "first level must be 0"};
    if (levels.back() != 1.0) return {Condition::grid, "last level must be 1"};
    for (std::size_t j = 1; j < levels.size(); ++j) {
        if (!(levels[j] > levels[j - 1])) {
            return {Condition::grid, describe_index("levels not strictly increasing", j)};
        }
    }
    for (std::size_t j = 0; j < lower.size(); ++j) {
        if (!std::isfinite(lower[j])) return {Condition::lower_monotone, describe_index("unbounded lower", j)};
        if (j > 0 && lower[j] < lower[j - 1]) {
            return {Condition::lower_monotone, describe_index("lower bound decreases", j)};
        }
    }
    for (std::size_t j = 0; j < upper.size(); ++j) {
        if (!std::isfinite(upper[j])) return {Condition::upper_monotone, describe_index("unbounded upper", j)};
        if (j > 0 && upper[j] > upper[j - 1]) {
            return {Condition::upper_monotone, describe_index("upper bound increases", j)};
        }
    }
    if (lower.back() > upper.back()) return {Condition::core_order, "lower exceeds upper at level 1"};
    return {};
}

FuzzyNumber::FuzzyNumber() : FuzzyNumber({0.0, 1.0}, {0.0, 0.0}, {0.0, 0.0}) {}

FuzzyNumber::FuzzyNumber(std::vector<double> levels, std::vector<double> lower,
                         std::vector<double> upper)
    : levels_(std::move(levels)), lower_(std::move(lower)), upper_(std::move(upper)) {}

FuzzyNumber FuzzyNumber::crisp(double r) {
    if (!std::isfinite(r)) throw InvalidValue("crisp value must be finite");
    return FuzzyNumber({0.0, 1.0}, {r, r}, {r, r});
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw InvalidShape("triangular parameters must be finite");
    }
    if (!(a <= b && b <= c)) throw InvalidShape("triangular parameters must satisfy a <= b <= c");
    return FuzzyNumber({0.0, 1.0}, {a, b}, {c, b});
}

FuzzyNumber FuzzyNumber::trapezoidal(double a, double b, double c, double d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw InvalidShape("trapezoidal parameters must be finite");
    }
    if (!(a <= b && b <= c && c <= d)) {
        throw InvalidShape("trapezoidal parameters must satisfy a <= b <= c <= d");
    }
    return FuzzyNumber({0.0, 1.0}, {a, b}, {d, c});
}

FuzzyNumber FuzzyNumber::from_envelope(std::vector<double> levels, std::vector<double> lower,
                                       std::vector<double> upper) {
    if (levels.size() == lower.size() && levels.size() == upper.size()) {
        std::size_t w = 0;
        for (std::size_t r = 0; r < levels.size(); ++r) {
            if (w > 0 && levels[r] == levels[w - 1]) {
                if (lower[r] != lower[w - 1] || upper[r] != upper[w - 1]) {
                    throw InvalidShape("(iii): jump in envelope at repeated level");
                }
                continue;
            }
            levels[w] = levels[r];
            lower[w] = lower[r];
            upper[w] = upper[r];
            ++w;
        }
        levels.resize(w);
        lower.resize(w);
        upper.resize(w);
    }
    const Validation v = validate(levels, lower, upper);
    if (!v.ok()) throw InvalidShape(std::string(v.label()) + ": " + v.message);
    return FuzzyNumber(std::move(levels), std::move(lower), std::move(upper));
}

double FuzzyNumber::lower_at(double alpha) const { return evaluate(levels_, lower_, alpha); }
double FuzzyNumber::upper_at(double alpha) const { return evaluate(levels_, upper_, alpha); }

bool FuzzyNumber::is_crisp() const noexcept {
    return lower_.front() == upper_.front() && lower_.back() == upper_.back();
}

std::pair<FuzzyNumber, FuzzyNumber> merge_grids(const FuzzyNumber& x, const FuzzyNumber& y) {
    auto grid = union_levels(x.levels(), y.levels());
    std::vector<double> xl, xu, yl, yu;
    for_each_merged(x, y, [&](double, double a, double b, double c, double d) {
        xl.push_back(a);
        xu.push_back(b);
        yl.push_back(c);
        yu.push_back(d);
    });
    return {FuzzyNumber::from_envelope(grid, std::move(xl), std::move(xu)),
            FuzzyNumber::from_envelope(std::move(grid), std::move(yl), std::move(yu))};
}

FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y) {
    std::vector<double> levels, lo, hi;
    for_each_merged(x, y, [&](double a, double xl, double xh, double yl, double yh) {
        levels.push_back(a);
        lo.push_back(xl + yl);
        hi.push_back(xh + yh);
    });
    return FuzzyNumber::from_envelope(std::move(levels), std::move(lo), std::move(hi));
}

FuzzyNumber neg(const FuzzyNumber& x) {
    std::vector<double> lo, hi;
    for (double u : x.upper()) lo.push_back(-u);
    for (double l : x.lower()) hi.push_back(-l);
    return FuzzyNumber::from_envelope({x.levels().begin(), x.levels().end()}, std::move(lo),
                                      std::move(hi));
}

FuzzyNumber sub(const FuzzyNumber& x, const FuzzyNumber& y) {
    std::vector<double> levels, lo, hi;
    for_each_merged(x, y, [&](double a, double xl, double xh, double yl, double yh) {
        levels.push_back(a);
        lo.push_back(xl - yh);
        hi.push_back(xh - yl);
    });
    return FuzzyNumber::from_envelope(std::move(levels), std::move(lo), std::move(hi));
}

FuzzyNumber scale(double c, const FuzzyNumber& x) {
    if (!std::isfinite(c)) throw InvalidValue("scale factor must be finite");
    std::vector<double> lo, hi;
    const auto xl = x.lower(), xu = x.upper();
    for (std::size_t j = 0; j < xl.size(); ++j) {
        const double p = c * xl[j], q = c * xu[j];
        lo.push_back(c >= 0.0 ? p : q);
        hi.push_back(c >= 0.0 ? q : p);
    }
    return FuzzyNumber::from_envelope({x.levels().begin(), x.levels().end()}, std::move(lo),
                                      std::move(hi));
}

double metric_d(const FuzzyNumber& x, const FuzzyNumber& y) {
    double d = 0.0;
    for_each_merged(x, y, [&](double, double xl, double xh, double yl, double yh) {
        d = std::max({d, std::abs(xl - yl), std::abs(xh - yh)});
    });
    return d;
}

double norm(const FuzzyNumber& x) noexcept {
    double d = 0.0;
    for (double v : x.lower()) d = std::max(d, std::abs(v));
    for (double v : x.upper()) d = std::max(d, std::abs(v));
    return d;
}

MidpointProfile MidpointProfile::constant(double value) {
    if (!std::isfinite(value)) throw InvalidValue("profile value must be finite");
    return MidpointProfile({0.0, 1.0}, {value, value});
}

double MidpointProfile::at(double alpha) const { return evaluate(levels_, mids_, alpha); }

MidpointProfile midpoint_profile(const FuzzyNumber& x) {
    std::vector<double> mids;
    const auto lo = x.lower(), hi = x.upper();
    for (std::size_t j = 0; j < lo.size(); ++j) mids.push_back((lo[j] + hi[j]) / 2.0);
    return MidpointProfile({x.levels().begin(), x.levels().end()}, std::move(mids));
}

MidpointProfile operator-(const MidpointProfile& p, const MidpointProfile& q) {
    auto grid = union_levels(p.levels(), q.levels());
    auto a = resample(p.levels(), p.mids(), grid);
    const auto b = resample(q.levels(), q.mids(), grid);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
    return MidpointProfile(std::move(grid), std::move(a));
}

double profile_sup_distance(const MidpointProfile& p, const MidpointProfile& q) {
    const auto lp = p.levels(), lq = q.levels();
    Cursor cp(lp, p.mids()), cq(lq, q.mids());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < lp.size() || j < lq.size()) {
        double a;
        if (j == lq.size() || (i < lp.size() && lp[i] < lq[j])) {
            a = lp[i++];
        } else if (i == lp.size() || lq[j] < lp[i]) {
            a = lq[j++];
        } else {
            a = lp[i];
            ++i;
            ++j;
        }
        d = std::max(d, std::abs(cp(a) - cq(a)));
    }
    return d;
}

double midpoint_norm(const FuzzyNumber& x) noexcept {
    double d = 0.0;
    const auto lo = x.lower(), hi = x.upper();
    for (std::size_t j = 0; j < lo.size(); ++j) d = std::max(d, std::abs((lo[j] + hi[j]) / 2.0));
    return d;
}

namespace {
void check_tolerance(double tol) {
    if (!(tol >= 0.0)) throw InvalidArgument("tolerance must be non-negative");
}
}  // namespace

bool is_symmetric(const FuzzyNumber& x, double tol) {
    check_tolerance(tol);
    return midpoint_norm(x) <= tol;
}

bool are_equivalent(const FuzzyNumber& x, const FuzzyNumber& y, double tol) {
    check_tolerance(tol);
    return profile_sup_distance(midpoint_profile(x), midpoint_profile(y)) <= tol;
}

FuzzyNumber symmetric_part(const FuzzyNumber& x) {
    std::vector<double> lo, hi;
    const auto xl = x.lower(), xu = x.upper();
    for (std::size_t j = 0; j < xl.size(); ++j) {
        const double w = (xu[j] - xl[j]) / 2.0;
        lo.push_back(-w);
        hi.push_back(w);
    }
    return FuzzyNumber::from_envelope({x.levels().begin(), x.levels().end()}, std::move(lo),
                                      std::move(hi));
}

std::optional<std::pair<FuzzyNumber, FuzzyNumber>> equivalence_witness(const FuzzyNumber& x,
                                                                        const FuzzyNumber& y,
                                                                        double tol) {
    if (!are_equivalent(x, y, tol)) return std::nullopt;
    return std::pair{symmetric_part(y), symmetric_part(x)};
}

}  // namespace fuzzybv
