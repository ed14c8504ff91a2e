#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "owa_reference_weights.hpp"
#include "test_support.hpp"
#include "visagg/errors.hpp"
#include "visagg/owa.hpp"

using namespace visagg;
using testsupport::dec1_values;

namespace {

// Brute-force orness sum, independent of the library implementation.
double orness_by_hand(const std::vector<double>& w) {
    const double n = static_cast<double>(w.size());
    double acc = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j)
        acc += ((n - static_cast<double>(j + 1)) / (n - 1.0)) * w[j];
    return acc;
}

} // namespace

TEST_CASE("first-weight solve: reference points") {
    CHECK(round_4dp(owa_solve_w1({8, 0.9})) == doctest::Approx(0.5864));
    CHECK(round_4dp(owa_solve_w1({9, 0.1})) == doctest::Approx(0.0009));
    CHECK(round_4dp(owa_solve_w1({10, 0.6})) == doctest::Approx(0.1569));
}

TEST_CASE("first-weight solve: contract") {
    CHECK_THROWS_AS(owa_solve_w1({2, 0.3}), contract_error);
    CHECK_THROWS_AS(owa_solve_w1({8, 0.5}), contract_error);
    CHECK_THROWS_AS(owa_solve_w1({8, 0.0}), contract_error);
    CHECK_THROWS_AS(owa_solve_w1({8, 1.0}), contract_error);
    CHECK_THROWS_AS(owa_solve_w1({8, -0.2}), contract_error);
}

TEST_CASE("first-weight solve: residual and bracket quality") {
    for (std::size_t n = 3; n <= 12; ++n) {
        for (int k = 1; k <= 19; ++k) {
            const double alpha = static_cast<double>(k) / 20.0;
            if (alpha == 0.5) continue;
            const double w1 = owa_solve_w1({n, alpha});
            const double c = (static_cast<double>(n) - 1.0) * alpha;
            const double nn = static_cast<double>(n);
            const double residual =
                w1 * c * std::pow((c + 1.0 - nn * w1) / c, nn) - ((c - nn) * w1 + 1.0);
            REQUIRE(std::abs(residual) < 1e-12);
            REQUIRE(w1 > 0.0);
            REQUIRE(w1 < 1.0);
        }
    }
}

TEST_CASE("weights: special cases") {
    CHECK(owa_weights({1, 0.3}).values() == std::vector<double>{1.0});
    const WeightVector pair = owa_weights({2, 0.7});
    CHECK(pair[0] == 0.7);
    CHECK(pair[1] == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(owa_weights({5, 1.0}).values() == std::vector<double>{1, 0, 0, 0, 0});
    CHECK(owa_weights({5, 0.0}).values() == std::vector<double>{0, 0, 0, 0, 1});

    const WeightVector uniform = owa_weights({8, 0.5});
    for (double w : uniform) CHECK(w == doctest::Approx(0.125).epsilon(1e-12));

    CHECK_THROWS_AS(owa_weights({0, 0.5}), contract_error);
    CHECK_THROWS_AS(owa_weights({4, 1.5}), contract_error);
}

TEST_CASE("weights: published reference rows") {
    // Every cell matches the printout at 4 decimals except the two n=8
    // cells that are inconsistent with the defining equations; for those
    // the computed value must equal the independently verified root.
    for (const auto& row : testsupport::owa_reference_rows()) {
        const WeightVector w = owa_weights({row.n, row.alpha});
        REQUIRE(w.size() == row.weights.size());
        for (std::size_t j = 0; j < w.size(); ++j) {
            const bool defective =
                std::any_of(testsupport::known_weight_defects().begin(),
                            testsupport::known_weight_defects().end(), [&](const auto& d) {
                                return d.n == row.n && d.alpha == row.alpha && d.index == j;
                            });
            if (defective) continue;
            CHECK(std::abs(round_4dp(w[j]) - row.weights[j]) <= 1e-4 + 1e-9);
        }
    }
    for (const auto& defect : testsupport::known_weight_defects()) {
        const WeightVector w = owa_weights({defect.n, defect.alpha});
        CHECK(w[defect.index] == doctest::Approx(defect.actual).epsilon(1e-9));
        CHECK(std::abs(round_4dp(w[defect.index]) - defect.printed) > 1e-4 + 1e-9);
    }
}

TEST_CASE("weights: geometric interior ratio") {
    for (std::size_t n = 3; n <= 12; ++n) {
        for (int k = 1; k <= 19; ++k) {
            const double alpha = static_cast<double>(k) / 20.0;
            if (alpha == 0.5) continue;
            const WeightVector w = owa_weights({n, alpha});
            const double q = w[1] / w[0];
            for (std::size_t j = 1; j + 1 < n; ++j) {
                const double ratio = w[j + 1] / w[j];
                REQUIRE(std::abs(ratio - q) <= 1e-8 * std::abs(q));
            }
        }
    }
}

TEST_CASE("weights: reversal symmetry") {
    for (std::size_t n = 3; n <= 12; ++n) {
        for (int k = 1; k <= 19; ++k) {
            const double alpha = static_cast<double>(k) / 20.0;
            const std::vector<double> w = owa_weights({n, alpha}).values();
            std::vector<double> reversed = owa_weights({n, 1.0 - alpha}).values();
            std::reverse(reversed.begin(), reversed.end());
            for (std::size_t j = 0; j < n; ++j)
                REQUIRE(std::abs(w[j] - reversed[j]) <= 1e-8);
        }
    }
}

TEST_CASE("orness recovers alpha across the grid") {
    for (std::size_t n = 3; n <= 12; ++n) {
        for (int k = 1; k <= 19; ++k) {
            const double alpha = static_cast<double>(k) / 20.0;
            const WeightVector w = owa_weights({n, alpha});
            REQUIRE(std::abs(orness(w) - alpha) <= 1e-6);
            REQUIRE(orness(w) == doctest::Approx(orness_by_hand(w.values())).epsilon(1e-12));
        }
    }
}

TEST_CASE("orness basics") {
    CHECK(orness(WeightVector(std::vector<double>(4, 0.25))) == doctest::Approx(0.5));
    CHECK(orness(WeightVector({1.0, 0.0, 0.0})) == 1.0);
    CHECK(orness(WeightVector({0.0, 0.0, 1.0})) == 0.0);
    CHECK_THROWS_AS(orness(WeightVector({1.0})), contract_error);
}

TEST_CASE("owa aggregate: December 1st row") {
    const auto& values = dec1_values();

    const AggregationResult half = owa_aggregate(values, {9, 0.5}, WeightRounding::four_dp);
    CHECK(std::abs(half.value - 6518.31) < 0.02);

    // exact mode at alpha 0.5 is the plain mean
    const AggregationResult exact_half = owa_aggregate(values, {9, 0.5});
    CHECK(exact_half.value == doctest::Approx(6518.966667).epsilon(1e-9));

    const AggregationResult high = owa_aggregate(values, {9, 0.9}, WeightRounding::four_dp);
    CHECK(std::abs(high.value - 8039.99) < 0.5);
}

TEST_CASE("owa aggregate: order statistics and contract") {
    const std::vector<double> v{3.0, 9.0, 1.0};
    CHECK(owa_aggregate(v, {3, 1.0}).value == 9.0); // one-hot max
    CHECK(owa_aggregate(v, {3, 0.0}).value == 1.0); // one-hot min
    CHECK(owa_aggregate(std::vector<double>{12.5}, {1, 0.4}).value == 12.5);
    CHECK_THROWS_AS(owa_aggregate(v, {4, 0.5}), contract_error);

    // permutation invariance: weights attach to ranks, not positions
    const std::vector<double> p{9.0, 1.0, 3.0};
    CHECK(owa_aggregate(v, {3, 0.7}).value ==
          doctest::Approx(owa_aggregate(p, {3, 0.7}).value).epsilon(1e-15));
}

TEST_CASE("owa aggregate: convexity") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.next_below(12);
        std::vector<double> v(n);
        for (double& x : v) x = rng.next_unit() * 100.0;
        const double alpha = static_cast<double>(1 + rng.next_below(19)) / 20.0;
        const double got = owa_aggregate(v, {n, alpha}).value;
        CHECK(got >= *std::min_element(v.begin(), v.end()) - 1e-9);
        CHECK(got <= *std::max_element(v.begin(), v.end()) + 1e-9);
    }
}
