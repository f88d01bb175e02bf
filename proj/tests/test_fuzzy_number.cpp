#include "fuzzybv/errors.hpp"
#include "fuzzybv/fuzzy_number.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace fuzzybv;

TEST_CASE("triangular cuts interpolate linearly") {
    const auto x = FuzzyNumber::triangular(-2, 0, 2);
    CHECK(x.cut(0.5) == Interval{-1.0, 1.0});
    CHECK(x.support() == Interval{-2.0, 2.0});
    CHECK(x.core() == Interval{0.0, 0.0});
    CHECK_THROWS_AS(FuzzyNumber::triangular(1, 0, 2), InvalidShape);
    CHECK_THROWS_AS(FuzzyNumber::triangular(0, 1, NAN), InvalidShape);
    CHECK_THROWS_AS(x.cut(1.5), InvalidArgument);
}

TEST_CASE("degenerate triangle is the crisp number") {
    for (double r : {-3.5, 0.0, 7.25}) {
        CHECK(FuzzyNumber::triangular(r, r, r) == FuzzyNumber::crisp(r));
        CHECK(FuzzyNumber::crisp(r).is_crisp());
    }
    CHECK(FuzzyNumber::crisp(0) == FuzzyNumber());
    CHECK(FuzzyNumber::crisp(5).cut(0.3) == Interval{5.0, 5.0});
    CHECK_THROWS_AS(FuzzyNumber::crisp(INFINITY), InvalidValue);
}

TEST_CASE("crisp k sits at distance k from zero") {
    for (int k = 0; k < 20; ++k) CHECK(metric_d(FuzzyNumber::crisp(k), FuzzyNumber()) == k);
}

TEST_CASE("validate labels the first broken condition") {
    const std::vector<double> lv{0, 1};
    CHECK(validate(lv, std::vector<double>{0, 1}, std::vector<double>{2, 1}).ok());

    auto v = validate(lv, std::vector<double>{0, -1}, std::vector<double>{2, 1});
    CHECK(v.condition == Condition::lower_monotone);
    CHECK(v.label() == "(i)");

    v = validate(lv, std::vector<double>{0, 0}, std::vector<double>{1, 2});
    CHECK(v.label() == "(ii)");

    v = validate(lv, std::vector<double>{0, 3}, std::vector<double>{4, 2});
    CHECK(v.condition == Condition::core_order);
    CHECK(v.label() == "(iv)");

    CHECK(validate(std::vector<double>{0.1, 1}, lv, lv).label() == "(iii)");
    CHECK(validate(std::vector<double>{0, 0.7}, lv, lv).label() == "(iii)");
    CHECK(validate(std::vector<double>{0, 0.5, 0.5, 1}, std::vector<double>{0, 0, 0, 0},
                   std::vector<double>{0, 0, 0, 0})
              .label() == "(iii)");
    CHECK(validate(lv, std::vector<double>{0}, lv).condition == Condition::shape);
    CHECK(validate(lv, std::vector<double>{0, INFINITY}, std::vector<double>{1, 1}).label() == "(i)");
}

TEST_CASE("from_envelope collapses repeated levels and rejects jumps") {
    const auto x = FuzzyNumber::from_envelope({0, 0.5, 0.5, 1}, {0, 1, 1, 2}, {4, 3, 3, 2});
    CHECK(x.levels().size() == 3);
    CHECK_THROWS_AS(FuzzyNumber::from_envelope({0, 0.5, 0.5, 1}, {0, 1, 1.5, 2}, {4, 3, 3, 2}), InvalidShape);
    CHECK_THROWS_AS(FuzzyNumber::from_envelope({0, 1}, {0, -1}, {2, 1}), InvalidShape);
}

TEST_CASE("merge_grids puts both numbers on the union grid") {
    const auto x = FuzzyNumber::triangular(0, 1, 2);
    const auto y = FuzzyNumber::from_envelope({0, 0.5, 1}, {-1, 0, 0.5}, {3, 2, 0.5});
    const auto [mx, my] = merge_grids(x, y);
    CHECK(std::vector<double>(mx.levels().begin(), mx.levels().end()) == std::vector<double>{0, 0.5, 1});
    CHECK(my == y);
    // closed form of triangular(0, 1, 2) at alpha = 0.5 is [0.5, 1.5]
    CHECK(mx.lower()[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mx.upper()[1] == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(mx.lower()[0] == 0.0);
    CHECK(mx.upper()[2] == 1.0);

    const auto [a, b] = merge_grids(y, y);
    CHECK(a == y);
    CHECK(b == y);
}

TEST_CASE("arithmetic on cuts") {
    SUBCASE("triangles widen under subtraction") {
        for (int k = 0; k < 50; ++k) {
            const auto d = sub(FuzzyNumber::triangular(-k, 0, k), FuzzyNumber::triangular(-k - 1, 0, k + 1));
            CHECK(d == FuzzyNumber::triangular(-2 * k - 1, 0, 2 * k + 1));
            CHECK(norm(d) == 2 * k + 1);
        }
    }
    SUBCASE("crisp sums") {
        CHECK(add(FuzzyNumber::crisp(2.5), FuzzyNumber::crisp(-4)) == FuzzyNumber::crisp(-1.5));
    }
    SUBCASE("sub against the dense oracle") {
        const auto got = sub(FuzzyNumber::triangular(1, 2, 3), FuzzyNumber::triangular(0, 1, 2));
        const auto want = oracle::sub(oracle::cuts(oracle::Trap{1, 2, 2, 3}), oracle::cuts(oracle::Trap{0, 1, 1, 2}));
        CHECK(oracle::dense_deviation(got, want) <= 1e-12);
        CHECK(got == FuzzyNumber::triangular(-1, 1, 3));
    }
    SUBCASE("negative scaling swaps bounds") {
        const auto x = scale(-2, FuzzyNumber::triangular(0, 1, 3));
        CHECK(x == FuzzyNumber::triangular(-6, -2, 0));
        CHECK_THROWS_AS(scale(NAN, x), InvalidValue);
    }
    SUBCASE("negation is an involution and sub(x, x) is symmetric") {
        const auto x = FuzzyNumber::from_envelope({0, 0.3, 1}, {-1, 0.5, 1}, {4, 2, 1.5});
        CHECK(neg(neg(x)) == x);
        CHECK(is_symmetric(sub(x, x)));
        CHECK_FALSE(sub(x, x) == FuzzyNumber());
    }
}

TEST_CASE("metric_d") {
    CHECK(metric_d(FuzzyNumber::crisp(3), FuzzyNumber::crisp(-1.5)) == 4.5);
    for (int k = 0; k < 10; ++k) {
        CHECK(metric_d(FuzzyNumber::triangular(-2 * k - 1, 0, 2 * k + 1), FuzzyNumber()) == 2 * k + 1);
    }
    const auto x = FuzzyNumber::triangular(0, 1, 2), y = FuzzyNumber::triangular(1, 2, 3);
    const double brute = oracle::dense_distance(oracle::cuts(oracle::Trap{0, 1, 1, 2}), oracle::cuts(oracle::Trap{1, 2, 2, 3}));
    CHECK(brute == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(metric_d(x, y) == doctest::Approx(brute).epsilon(1e-12));
    CHECK(metric_d(x, x) == 0.0);

    // the peak of a piecewise-linear difference can sit at an interior breakpoint
    const auto bent = FuzzyNumber::from_envelope({0, 0.5, 1}, {0, 0.9, 1}, {2, 1.1, 1});
    CHECK(metric_d(bent, x) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("midpoint profiles") {
    CHECK(midpoint_profile(FuzzyNumber::crisp(3.5)).mids()[0] == 3.5);
    for (int k = 0; k < 10; ++k) {
        const auto p = midpoint_profile(FuzzyNumber::triangular(-k, 0, k));
        CHECK(profile_sup_distance(p, MidpointProfile::constant(0)) == 0.0);
    }
    const auto p = midpoint_profile(FuzzyNumber::triangular(0, 1, 4));
    for (double al : {0.0, 0.25, 0.5, 0.9, 1.0}) CHECK(p.at(al) == doctest::Approx(2 - al).epsilon(1e-12));
    CHECK(profile_sup_distance(p, MidpointProfile::constant(0)) == 2.0);
    CHECK(profile_sup_distance(MidpointProfile::constant(1.5), MidpointProfile::constant(-2)) == 3.5);
}

TEST_CASE("symmetry and equivalence") {
    CHECK(is_symmetric(FuzzyNumber::triangular(-1, 0, 1)));
    CHECK(is_symmetric(FuzzyNumber()));
    CHECK_FALSE(is_symmetric(FuzzyNumber::triangular(0, 1, 2)));
    CHECK_THROWS_AS(is_symmetric(FuzzyNumber(), -1e-3), InvalidArgument);

    const auto t = FuzzyNumber::triangular(0, 1, 2);
    CHECK(are_equivalent(t, t));
    CHECK(are_equivalent(FuzzyNumber::triangular(-1, 0, 1), FuzzyNumber::crisp(0)));
    CHECK(are_equivalent(t, FuzzyNumber::crisp(1)));
    CHECK_FALSE(are_equivalent(t, FuzzyNumber::crisp(0)));
    CHECK_THROWS_AS(are_equivalent(t, t, -1), InvalidArgument);
}

TEST_CASE("equivalence witnesses are symmetric and close the equation") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> w(0.0, 3.0);
    for (int n = 0; n < 200; ++n) {
        const auto x = oracle::random_trap(rng).number();
        const double r = w(rng);
        // adding a symmetric number keeps the midpoint profile
        const auto y = x + FuzzyNumber::trapezoidal(-r, -r / 3, r / 3, r);
        REQUIRE(are_equivalent(x, y, 1e-9));
        const auto wit = equivalence_witness(x, y, 1e-9);
        REQUIRE(wit.has_value());
        CHECK(is_symmetric(wit->first));
        CHECK(is_symmetric(wit->second));
        CHECK(metric_d(x + wit->first, y + wit->second) <= 1e-9);
    }
    CHECK_FALSE(equivalence_witness(FuzzyNumber::crisp(0), FuzzyNumber::crisp(1)).has_value());
}

TEST_CASE("properties on random envelopes") {
    std::mt19937_64 rng(2024);
    const auto zero = FuzzyNumber();
    for (int n = 0; n < 300; ++n) {
        const auto x = oracle::random_trap(rng).number();
        const auto y = oracle::random_trap(rng).number();
        const auto z = oracle::random_trap(rng).number();
        CHECK(metric_d(x, y) == metric_d(y, x));
        CHECK(metric_d(x, z) <= metric_d(x, y) + metric_d(y, z) + 1e-12);
        CHECK(std::abs(metric_d(x + z, y + z) - metric_d(x, y)) <= 1e-12);
        CHECK(profile_sup_distance(midpoint_profile(x), MidpointProfile::constant(0)) <= metric_d(x, zero));
        // midpoint of a difference is the difference of midpoints
        const auto lhs = midpoint_profile(x - y);
        const auto rhs = midpoint_profile(x) - midpoint_profile(y);
        CHECK(profile_sup_distance(lhs, rhs) <= 1e-12);
        for (const auto& r : {x + y, x - y, -x, scale(-1.7, x)}) {
            CHECK(validate(r.levels(), r.lower(), r.upper()).ok());
        }
    }
}
