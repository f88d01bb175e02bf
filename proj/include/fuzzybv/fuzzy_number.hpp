#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuzzybv {

inline constexpr double kDefaultTolerance = 1e-9;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const Interval&) const = default;
};

/// Which representation condition a candidate envelope breaks.
///
/// The labels follow the classical characterization of fuzzy numbers by their
/// cut bounds: (i) lower bound bounded and non-decreasing, (ii) upper bound
/// bounded and non-increasing, (iii) continuity at the grid level (a level grid
/// covering [0, 1] without jumps), (iv) lower <= upper at level 1.
enum class Condition {
    none,
    shape,           // mismatched or too short arrays
    lower_monotone,  // (i)
    upper_monotone,  // (ii)
    grid,            // (iii)
    core_order,      // (iv)
};

struct Validation {
    Condition condition = Condition::none;
    std::string message;

    bool ok() const noexcept { return condition == Condition::none; }
    std::string_view label() const noexcept;
};

/// Checks raw envelope data. Never throws.
Validation validate(std::span<const double> levels, std::span<const double> lower,
                    std::span<const double> upper);

/// A fuzzy real number stored as a continuous piecewise-linear alpha-cut envelope.
///
/// `levels` is strictly increasing from 0 to 1; `lower[j]`/`upper[j]` bound the
/// `levels[j]`-cut and are linearly interpolated in between. Values are immutable
/// once built, so they can be shared freely across threads.
class FuzzyNumber {
public:
    /// The crisp zero.
    FuzzyNumber();

    static FuzzyNumber crisp(double r);
    static FuzzyNumber triangular(double a, double b, double c);
    static FuzzyNumber trapezoidal(double a, double b, double c, double d);

    /// Builds from breakpoint data. Duplicate levels carrying identical bounds are
    /// collapsed; anything else that fails `validate` throws InvalidShape.
    static FuzzyNumber from_envelope(std::vector<double> levels, std::vector<double> lower,
                                     std::vector<double> upper);

    std::span<const double> levels() const noexcept { return levels_; }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }

    double lower_at(double alpha) const;
    double upper_at(double alpha) const;
    Interval cut(double alpha) const { return {lower_at(alpha), upper_at(alpha)}; }
    Interval support() const noexcept { return {lower_.front(), upper_.front()}; }
    Interval core() const noexcept { return {lower_.back(), upper_.back()}; }

    bool is_crisp() const noexcept;

    /// Exact equality of the stored representation.
    bool operator==(const FuzzyNumber&) const = default;

private:
    FuzzyNumber(std::vector<double> levels, std::vector<double> lower, std::vector<double> upper);

    std::vector<double> levels_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Re-expresses both operands on the union of their level grids.
std::pair<FuzzyNumber, FuzzyNumber> merge_grids(const FuzzyNumber& x, const FuzzyNumber& y);

FuzzyNumber add(const FuzzyNumber& x, const FuzzyNumber& y);
FuzzyNumber neg(const FuzzyNumber& x);
/// Level-wise [x.lo - y.hi, x.hi - y.lo]. Not an inverse of add: sub(x, x) is symmetric, not zero.
FuzzyNumber sub(const FuzzyNumber& x, const FuzzyNumber& y);
FuzzyNumber scale(double c, const FuzzyNumber& x);

inline FuzzyNumber operator+(const FuzzyNumber& x, const FuzzyNumber& y) { return add(x, y); }
inline FuzzyNumber operator-(const FuzzyNumber& x, const FuzzyNumber& y) { return sub(x, y); }
inline FuzzyNumber operator-(const FuzzyNumber& x) { return neg(x); }
inline FuzzyNumber operator*(double c, const FuzzyNumber& x) { return scale(c, x); }

/// Supremum over alpha of the larger deviation between matching cut bounds.
/// Evaluated at the merged breakpoints, where a piecewise-linear difference peaks.
double metric_d(const FuzzyNumber& x, const FuzzyNumber& y);

/// metric_d(x, 0) without building the zero element.
double norm(const FuzzyNumber& x) noexcept;

/// alpha -> midpoint of the alpha-cut, piecewise linear on the source grid.
class MidpointProfile {
public:
    static MidpointProfile constant(double value);

    std::span<const double> levels() const noexcept { return levels_; }
    std::span<const double> mids() const noexcept { return mids_; }
    double at(double alpha) const;

    bool operator==(const MidpointProfile&) const = default;

private:
    friend MidpointProfile midpoint_profile(const FuzzyNumber&);
    friend MidpointProfile operator-(const MidpointProfile&, const MidpointProfile&);

    MidpointProfile(std::vector<double> levels, std::vector<double> mids)
        : levels_(std::move(levels)), mids_(std::move(mids)) {}

    std::vector<double> levels_;
    std::vector<double> mids_;
};

MidpointProfile midpoint_profile(const FuzzyNumber& x);

/// Pointwise difference on the merged grid.
MidpointProfile operator-(const MidpointProfile& p, const MidpointProfile& q);

double profile_sup_distance(const MidpointProfile& p, const MidpointProfile& q);

/// sup over alpha of |midpoint(alpha)|; the distance of the midpoint function from 0.
double midpoint_norm(const FuzzyNumber& x) noexcept;

bool is_symmetric(const FuzzyNumber& x, double tol = kDefaultTolerance);

/// Decides X ~ Y (X + S1 = Y + S2 for symmetric S1, S2) by comparing midpoint profiles.
bool are_equivalent(const FuzzyNumber& x, const FuzzyNumber& y, double tol = kDefaultTolerance);

/// The spread of x re-centred at zero: level-wise [-(hi - lo)/2, (hi - lo)/2].
FuzzyNumber symmetric_part(const FuzzyNumber& x);

/// When x ~ y, returns symmetric (S1, S2) with x + S1 = y + S2 up to rounding.
std::optional<std::pair<FuzzyNumber, FuzzyNumber>> equivalence_witness(
    const FuzzyNumber& x, const FuzzyNumber& y, double tol = kDefaultTolerance);

}  // namespace fuzzybv
