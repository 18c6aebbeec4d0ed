// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/power_allocation.hpp"

#include "mana/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace mana;

namespace {

// rho = 1 so that gains are directly the SNR products rho * |h|^2.
LinkBudget unit_budget(double threshold) { return LinkBudget::from_powers(1.0, 1.0, threshold); }

}  // namespace

TEST_CASE("link budget and gain ordering")
{
    const auto lb = LinkBudget::from_powers(0.0625, 1e-12, 10.0);
    CHECK(lb.snr_ratio == doctest::Approx(6.25e10));
    CHECK_THROWS_AS(LinkBudget::from_powers(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LinkBudget::from_powers(1.0, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LinkBudget::from_powers(1.0, 1.0, 0.0), std::invalid_argument);

    const auto g = GainPair::from_user_gains(2.0, 5.0);
    CHECK(g.strong_user == 2);
    CHECK(g.weak_user() == 1);
    CHECK(g.strong_gain == 5.0);
    CHECK(g.weak_gain == 2.0);
    CHECK(GainPair::from_user_gains(3.0, 3.0).strong_user == 1);
    CHECK_THROWS_AS(GainPair::from_user_gains(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("allocation bounds")
{
    const auto lb = unit_budget(10.0);
    SUBCASE("10000 / 1000")
    {
        const auto b = alloc_bounds(GainPair::from_user_gains(10000.0, 1000.0), lb);
        CHECK(b.lower == doctest::Approx(0.001).epsilon(1e-14));
        CHECK(b.upper_strong == doctest::Approx(0.0908181818181818182).epsilon(1e-14));
        CHECK(b.upper_weak == doctest::Approx(0.09).epsilon(1e-14));
    }
    SUBCASE("100 / 50")
    {
        const auto b = alloc_bounds(GainPair::from_user_gains(100.0, 50.0), lb);
        CHECK(b.lower == doctest::Approx(0.1).epsilon(1e-14));
        CHECK(b.upper_strong == doctest::Approx(0.0818181818181818182).epsilon(1e-14));
        CHECK(b.upper_weak == doctest::Approx(0.0727272727272727273).epsilon(1e-14));
    }
    SUBCASE("both at threshold")
    {
        const auto b = alloc_bounds(GainPair::from_user_gains(10.0, 10.0), lb);
        CHECK(b.lower == 1.0);
        CHECK(b.upper_strong == 0.0);
        CHECK(b.upper_weak == 0.0);
    }
    SUBCASE("zero gains use infinite sentinels")
    {
        const auto b = alloc_bounds(GainPair::from_user_gains(100.0, 0.0), lb);
        CHECK(std::isinf(b.upper_weak));
        CHECK(b.upper_weak < 0.0);
        const auto dead = alloc_bounds(GainPair::from_user_gains(0.0, 0.0), lb);
        CHECK(std::isinf(dead.lower));
    }
    SUBCASE("mu2 <= mu1 whenever weak <= strong")
    {
        std::mt19937_64 rng(4);
        std::uniform_real_distribution<double> exp10(-2.0, 6.0);
        for (int i = 0; i < 10000; ++i) {
            const auto g = GainPair::from_user_gains(std::pow(10.0, exp10(rng)), std::pow(10.0, exp10(rng)));
            const auto b = alloc_bounds(g, unit_budget(std::pow(10.0, exp10(rng) / 4.0)));
            REQUIRE(b.upper_weak <= b.upper_strong);
            REQUIRE(b.lower > 0.0);
        }
    }
}

TEST_CASE("case classification examples")
{
    const auto lb = unit_budget(10.0);
    SUBCASE("Case I")
    {
        const auto out = classify_and_allocate(GainPair::from_user_gains(10000.0, 1000.0), lb);
        CHECK(out.case_label == AllocCase::I);
        CHECK(out.alpha_s == doctest::Approx(0.09).epsilon(1e-14));
        CHECK(out.sinr_strong == doctest::Approx(900.0).epsilon(1e-12));
        CHECK(out.sinr_weak == doctest::Approx(10.0).epsilon(1e-12));
        // log2(901), log2(11)
        CHECK(out.rate_strong == doctest::Approx(9.81538329581353859).epsilon(1e-12));
        CHECK(out.rate_weak == doctest::Approx(3.45943161863729726).epsilon(1e-12));
        CHECK_FALSE(out.outage_strong);
        CHECK_FALSE(out.outage_weak);
    }
    SUBCASE("Case II, strong user dropped")
    {
        const auto out = classify_and_allocate(GainPair::from_user_gains(100.0, 50.0), lb);
        CHECK(out.case_label == AllocCase::II);
        CHECK(out.alpha_s == 0.0);
        CHECK(out.outage_strong);
        CHECK_FALSE(out.outage_weak);
        CHECK(out.rate_strong == 0.0);
        CHECK(out.rate_weak == doctest::Approx(5.67242534197149559).epsilon(1e-12));  // log2(51)
    }
    SUBCASE("Case II, weak user dropped")
    {
        // l1 = 0.01, mu2 = 1/1210: R1 = log2(1 + 990/11) > R2 = log2(12).
        const auto out = classify_and_allocate(GainPair::from_user_gains(1000.0, 11.0), lb);
        CHECK(out.case_label == AllocCase::II);
        CHECK(out.alpha_s == 1.0);
        CHECK_FALSE(out.outage_strong);
        CHECK(out.outage_weak);
        CHECK(out.rate_weak == 0.0);
        CHECK(out.rate_strong == doctest::Approx(std::log2(1001.0)));
    }
    SUBCASE("Case III")
    {
        const auto out = classify_and_allocate(GainPair::from_user_gains(100.0, 5.0), lb);
        CHECK(out.case_label == AllocCase::III);
        CHECK(out.alpha_s == 1.0);
        CHECK(out.rate_strong == doctest::Approx(6.65821148275179474).epsilon(1e-12));  // log2(101)
        CHECK(out.outage_weak);
        CHECK_FALSE(out.outage_strong);
    }
    SUBCASE("Case V")
    {
        const auto out = classify_and_allocate(GainPair::from_user_gains(5.0, 2.0), lb);
        CHECK(out.case_label == AllocCase::V);
        CHECK(out.outage_strong);
        CHECK(out.outage_weak);
        CHECK(out.sum_rate() == 0.0);
    }
    SUBCASE("dead channel")
    {
        const auto out = classify_and_allocate(GainPair::from_user_gains(0.0, 0.0), lb);
        CHECK(out.case_label == AllocCase::V);
        CHECK(out.sum_rate() == 0.0);
    }
    SUBCASE("equal gains in Case I return mu2")
    {
        const auto g = GainPair::from_user_gains(1000.0, 1000.0);
        const auto out = classify_and_allocate(g, lb);
        CHECK(out.case_label == AllocCase::I);
        CHECK(out.alpha_s == alloc_bounds(g, lb).upper_weak);
    }
}

TEST_CASE("outcome invariants over random inputs")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> exp10(-2.0, 5.0);
    for (int i = 0; i < 20000; ++i) {
        const auto g = GainPair::from_user_gains(std::pow(10.0, exp10(rng)), std::pow(10.0, exp10(rng)));
        const auto out = classify_and_allocate(g, unit_budget(std::pow(10.0, exp10(rng) / 3.0)));
        REQUIRE(out.alpha_s >= 0.0);
        REQUIRE(out.alpha_s <= 1.0);
        if (out.outage_strong) {
            REQUIRE(out.rate_strong == 0.0);
        }
        if (out.outage_weak) {
            REQUIRE(out.rate_weak == 0.0);
        }
        switch (out.case_label) {
        case AllocCase::I: REQUIRE((!out.outage_strong && !out.outage_weak)); break;
        case AllocCase::II: REQUIRE(out.outage_strong != out.outage_weak); break;
        case AllocCase::III: REQUIRE((!out.outage_strong && out.outage_weak)); break;
        case AllocCase::IV: FAIL("Case IV is unreachable for ordered gains"); break;
        case AllocCase::V: REQUIRE((out.outage_strong && out.outage_weak)); break;
        }
    }
}

TEST_CASE("SINR and rates")
{
    const auto lb = unit_budget(10.0);
    const auto g = GainPair::from_user_gains(10000.0, 1000.0);
    const auto full = sinr_and_rates(1.0, g, lb);
    CHECK(full.sinr_weak == 0.0);
    CHECK(full.rate_weak == 0.0);
    const auto none = sinr_and_rates(0.0, g, lb);
    CHECK(none.sinr_strong == 0.0);
    CHECK(none.sinr_weak == 1000.0);
    const auto mid = sinr_and_rates(0.09, g, lb);
    CHECK(mid.sinr_strong == doctest::Approx(900.0).epsilon(1e-13));
    CHECK(mid.sinr_weak == doctest::Approx(10.0).epsilon(1e-13));
}

TEST_CASE("allocation metric and derivative")
{
    const auto lb = unit_budget(10.0);
    SUBCASE("equal gains have zero slope")
    {
        const auto g = GainPair::from_user_gains(500.0, 500.0);
        for (double a : {0.0, 0.3, 0.7, 1.0}) {
            CHECK(alloc_metric_derivative(a, g, lb) == 0.0);
        }
    }
    SUBCASE("alpha = 0")
    {
        const auto g = GainPair::from_user_gains(800.0, 40.0);
        CHECK(alloc_metric(0.0, g, lb) == doctest::Approx(41.0));
    }
    SUBCASE("finite-difference agreement and monotonicity")
    {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> exp10(-1.0, 4.0);
        std::uniform_real_distribution<double> unit(1e-7, 1.0 - 1e-7);
        for (int i = 0; i < 10000; ++i) {
            const auto g = GainPair::from_user_gains(std::pow(10.0, exp10(rng)), std::pow(10.0, exp10(rng)));
            const double a = unit(rng);
            const double h = 1e-7;
            const double fd = oracle::fd_metric_slope(a, g, lb, h);
            const double d = alloc_metric_derivative(a, g, lb);
            REQUIRE(d >= 0.0);
            REQUIRE(std::abs(d - fd) <= 1e-5 * std::max(d, 1e-300));
            const double gs = a * g.strong_gain;
            const double gw = (1.0 - a) * g.weak_gain / (a * g.weak_gain + 1.0);
            REQUIRE(alloc_metric(a, g, lb) == doctest::Approx((1.0 + gs) * (1.0 + gw)).epsilon(1e-13));
        }
    }
    SUBCASE("metric is nondecreasing on a grid")
    {
        const auto g = GainPair::from_user_gains(3000.0, 200.0);
        double prev = alloc_metric(0.0, g, lb);
        for (int i = 1; i <= 10000; ++i) {
            const double v = alloc_metric(i / 10000.0, g, lb);
            REQUIRE(v >= prev - 1e-12 * prev);
            prev = v;
        }
    }
}

TEST_CASE("Case I choice matches the alpha grid scan")
{
    const auto lb = unit_budget(10.0);
    const auto g = GainPair::from_user_gains(10000.0, 1000.0);
    const auto scan = oracle::grid_search_alpha(g, lb, {10000});
    REQUIRE(scan.has_value());
    const auto out = classify_and_allocate(g, lb);
    CHECK(std::abs(scan->alpha - out.alpha_s) <= (0.09 - 0.001) / 9999.0);
    CHECK(alloc_metric(out.alpha_s, g, lb) >= scan->metric * (1.0 - 1e-12));
}
