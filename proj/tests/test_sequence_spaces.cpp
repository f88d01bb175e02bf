#include "fuzzybv/errors.hpp"
#include "fuzzybv/fuzzy_sequence.hpp"
#include "fuzzybv/sequence_spaces.hpp"

#include <doctest.h>

#include <cmath>

using namespace fuzzybv;

namespace {

FuzzySequence unbounded_sequence() {
    return FuzzySequence::alternating(FuzzySequence::crisp(RealGenerator::power(1, 0, 1), 1),
                                      FuzzySequence::crisp(RealGenerator::constant(0), 1));
}
WeightScheme quartic_scheme() { return {RealGenerator::power(1, 0, -4), RealGenerator::constant(1), 1}; }

FuzzySequence widening_triangles() {
    return FuzzySequence::triangular(RealGenerator::power(-1, 0, 1), RealGenerator::constant(0),
                                     RealGenerator::power(1, 0, 1), 0);
}

}  // namespace

TEST_CASE("sequence factories") {
    const auto x = unbounded_sequence();
    CHECK(x[1] == FuzzyNumber::crisp(1));
    CHECK(x[2] == FuzzyNumber::crisp(0));
    CHECK(x[7] == FuzzyNumber::crisp(7));
    CHECK_THROWS_AS(x[0], IndexError);
    CHECK(widening_triangles()[3] == FuzzyNumber::triangular(-3, 0, 3));
    const auto t = FuzzySequence::table({FuzzyNumber::crisp(1), FuzzyNumber::crisp(2)}, 5);
    CHECK(t[6] == FuzzyNumber::crisp(2));
    CHECK_THROWS_AS(t[7], IndexError);
    CHECK_THROWS_AS(FuzzySequence::perturbed(t, widening_triangles()), ConfigError);
}

TEST_CASE("delta of widening triangles") {
    const auto x = widening_triangles();
    for (index_t k = 0; k < 20; ++k) {
        CHECK(delta(x)[k] == FuzzyNumber::triangular(-2.0 * k - 1, 0, 2.0 * k + 1));
        CHECK(delta_distance(x, k) == 2 * k + 1);
    }
}

TEST_CASE("widening triangles: symmetric deltas vanish on midpoints") {
    const WeightScheme ones(RealGenerator::constant(1), RealGenerator::constant(1), 0);
    const auto x = widening_triangles();
    const auto full = variation_report(x, ones, 1000);
    const auto mid = midpoint_variation_report(x, ones, 1000);
    CHECK(mid.total() == 0.0);
    CHECK(mid.verdict.verdict == Verdict::convergent);
    CHECK(full.verdict.verdict == Verdict::divergent);
    for (index_t k = 0; k <= 1000; ++k) {
        CHECK(full.terms[static_cast<std::size_t>(k)] == static_cast<double>((k + 1) * (k + 1)));
    }
}

TEST_CASE("unbounded member: variation against hand-summed terms") {
    const auto r = variation_report(unbounded_sequence(), quartic_scheme(), 10000);
    // d_1 = 1, d_k = k + 1 at even k, k at odd k > 1
    CHECK(r.distances[0] == 1);
    CHECK(r.distances[1] == 3);
    CHECK(r.distances[2] == 3);
    CHECK(r.inner[2] == 7);
    CHECK(r.terms[2] == doctest::Approx(7.0 / 81.0).epsilon(1e-15));
    CHECK(r.verdict.verdict == Verdict::convergent);
    double mean = 0;
    for (index_t k = 1000; k <= 10000; ++k) mean += r.terms[static_cast<std::size_t>(k - 1)] * double(k) * double(k);
    mean /= 9001;
    CHECK(mean == doctest::Approx(0.5).epsilon(1e-3));

    const auto sup = sup_norm_partial(unbounded_sequence(), 10000);
    CHECK(sup.sup == 9999);
    CHECK(sup.growth == Growth::growing);
}

TEST_CASE("variation_from_distances keeps the absolute value outside the inner sum") {
    const WeightScheme s(RealGenerator::constant(-1), RealGenerator::oscillating(0, 1, 0, 0), 0);
    const std::vector<double> d{1, 1, 1, 1};
    const auto r = variation_from_distances(d, s, 3);
    CHECK(r.inner == std::vector<double>{1, 0, 1, 0});
    CHECK(r.terms == std::vector<double>{1, 0, 1, 0});
    CHECK(r.total() == 2);
    CHECK_THROWS_AS(variation_from_distances(d, s, 4), IndexError);
}

TEST_CASE("metrics D and rho under a shrinking perturbation") {
    const auto x = unbounded_sequence();
    const auto s = quartic_scheme();
    CHECK(bv_metric_D(x, x, s, 100) == 0.0);
    for (double n : {10.0, 1000.0}) {
        const auto bump = FuzzySequence::triangular(RealGenerator::constant(-1 / n), RealGenerator::constant(0),
                                                    RealGenerator::constant(1 / n), 1);
        const auto y = FuzzySequence::perturbed(x, bump);
        CHECK(c_delta_metric_rho(y, x, 1000) == doctest::Approx(3 / n).epsilon(1e-9));
        const double D = bv_metric_D(y, x, s, 1000);
        CHECK(D > 0);
        CHECK(D == doctest::Approx(bv_metric_D(x, y, s, 1000)).epsilon(1e-15));
    }
    CHECK_THROWS_AS(bv_metric_D(x, widening_triangles(), s, 10), ConfigError);
}

TEST_CASE("lp partial sums") {
    const auto g = FuzzySequence::crisp(RealGenerator::geometric(1, 0.5), 0);
    const auto lp = lp_partial(g, 2, 60);
    CHECK(lp.sum == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(lp.verdict.verdict == Verdict::convergent);
    CHECK_THROWS_AS(lp_partial(g, 0.5, 10), InvalidArgument);
    const auto h = FuzzySequence::crisp(RealGenerator::power(1, 1, -0.5), 0);
    CHECK(lp_partial(h, 1, 10000).verdict.verdict == Verdict::divergent);
    CHECK(sup_norm_partial(h, 10000).growth == Growth::bounded);
}

TEST_CASE("statistical density") {
    const auto g = FuzzySequence::crisp(RealGenerator::geometric(4.0 / 3.0, 0.25), 0);
    // deltas are 4^-k: k = 0..3 reach 0.01
    CHECK(density_counts(g, 0.01, 10).back() == 4);
    CHECK(statistical_density(g, 0.01, 10000) == 4.0 / 10001.0);
    CHECK(statistical_density(FuzzySequence::constant(FuzzyNumber(), 0), 1e-9, 50) == 0.0);
    CHECK(statistical_density(widening_triangles(), 1, 50) == 1.0);
    CHECK_THROWS_AS(statistical_density(g, 0, 10), InvalidArgument);
}

TEST_CASE("Cesaro means") {
    const auto osc = FuzzySequence::crisp(RealGenerator::oscillating(5, 1, 0, 0), 0);
    const auto five = FuzzyNumber::crisp(5);
    CHECK(cesaro_distance(osc, five, 9) == 1.0);
    const auto prof = cesaro_profile(FuzzySequence::crisp(RealGenerator::power(1, 0, 1), 0), FuzzyNumber(), 4);
    CHECK(prof == std::vector<double>{0, 0.5, 1, 1.5, 2});
    CHECK_THROWS_AS(cesaro_distance(osc, five, -1), IndexError);
}
