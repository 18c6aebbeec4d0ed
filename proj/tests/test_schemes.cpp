// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/scenario.hpp"
#include "mana/schemes.hpp"

#include <doctest.h>

#include <cmath>

using namespace mana;

namespace {

// One path per side and a single antenna at the origin: |h_i|^2 = |sigma_i|^2.
UserChannelModel flat_user(Complex sigma)
{
    Eigen::MatrixXcd prm(1, 1);
    prm(0, 0) = sigma;
    return UserChannelModel({PathAngles{0.2, 0.3}}, {PathAngles{-0.4, 0.7}}, prm, 0.1);
}

ScenarioDraw flat_draw(Complex s1, Complex s2, double threshold, double half_side = 0.15)
{
    return ScenarioDraw{{flat_user(s1), flat_user(s2)},
                        AntennaArray({{0.0, 0.0}}),
                        LinkBudget::from_powers(1.0, 1.0, threshold),
                        {MoveRegion(half_side), MoveRegion(half_side)},
                        0,
                        7};
}

}  // namespace

TEST_CASE("scheme names")
{
    CHECK(to_string(Scheme::ProposedMaNoma) == "proposed_ma_noma");
    CHECK(to_string(Scheme::ConventionalNoma) == "conventional_noma");
    CHECK(to_string(Scheme::ConventionalOma) == "conventional_oma");
    CHECK(to_string(Scheme::OmaMa) == "oma_ma");
}

TEST_CASE("NOMA mapping back to users")
{
    SUBCASE("user 2 strong, Case I")
    {
        const auto draw = flat_draw(Complex(std::sqrt(1000.0), 0.0), Complex(0.0, 100.0), 10.0);
        const auto r = eval_conventional_noma(draw);
        REQUIRE(r.case_label.has_value());
        CHECK(*r.case_label == AllocCase::I);
        CHECK(*r.alpha_s == doctest::Approx(0.09).epsilon(1e-12));
        CHECK(r.gains[0] == doctest::Approx(1000.0).epsilon(1e-14));
        CHECK(r.gains[1] == doctest::Approx(10000.0).epsilon(1e-14));
        CHECK(r.rate_user2 == doctest::Approx(9.81538329581353859).epsilon(1e-12));
        CHECK(r.rate_user1 == doctest::Approx(3.45943161863729726).epsilon(1e-12));
        CHECK(r.sum_rate == doctest::Approx(r.rate_user1 + r.rate_user2).epsilon(1e-15));
        CHECK_FALSE(r.outage_user1);
        CHECK_FALSE(r.outage_user2);
    }
    SUBCASE("equal gains treat user 1 as strong")
    {
        const auto draw = flat_draw(Complex(40.0, 0.0), Complex(0.0, 40.0), 10.0);
        const auto r = eval_conventional_noma(draw);
        CHECK(*r.case_label == AllocCase::I);
        // Strong user 1 gets alpha_s * 1600 with no interference.
        CHECK(r.rate_user1 == doctest::Approx(std::log2(1.0 + *r.alpha_s * 1600.0)).epsilon(1e-12));
    }
    SUBCASE("user 1 dropped in Case II")
    {
        // Strong user 1 at 100, weak user 2 at 50 (Case II, alpha = 0).
        const auto r = eval_conventional_noma(flat_draw(Complex(10.0, 0.0), Complex(std::sqrt(50.0), 0.0), 10.0));
        CHECK(*r.case_label == AllocCase::II);
        CHECK(r.outage_user1);
        CHECK_FALSE(r.outage_user2);
        CHECK(r.rate_user1 == 0.0);
        CHECK(r.rate_user2 == doctest::Approx(5.67242534197149559).epsilon(1e-12));
    }
    SUBCASE("dead channels")
    {
        const auto draw = flat_draw(Complex(0.0, 0.0), Complex(0.0, 0.0), 10.0);
        for (const auto& r : {eval_conventional_noma(draw), eval_proposed(draw, {}), eval_oma(draw),
                              eval_oma_ma(draw, {})}) {
            CHECK(r.sum_rate == 0.0);
            CHECK(r.outage_user1);
            CHECK(r.outage_user2);
        }
    }
}

TEST_CASE("OMA rate")
{
    CHECK(oma_rate(4.0, 4.0) == doctest::Approx(0.5 * std::log2(5.0)).epsilon(1e-15));
    CHECK(oma_rate(std::nextafter(4.0, 0.0), 4.0) == 0.0);
    CHECK(oma_rate(0.0, 4.0) == 0.0);

    // SNR exactly at the threshold is served.
    const auto at = eval_oma(flat_draw(Complex(2.0, 0.0), Complex(0.0, 1.0), 4.0));
    CHECK_FALSE(at.outage_user1);
    CHECK(at.outage_user2);
    CHECK(at.rate_user1 == doctest::Approx(0.5 * std::log2(5.0)).epsilon(1e-14));
    CHECK(at.rate_user2 == 0.0);
    CHECK_FALSE(at.alpha_s.has_value());
    CHECK_FALSE(at.case_label.has_value());
}

TEST_CASE("position-invariant channels make MA pointless")
{
    const auto draw = flat_draw(Complex(30.0, 5.0), Complex(-3.0, 4.0), 10.0);
    const auto p = eval_proposed(draw, {});
    const auto c = eval_conventional_noma(draw);
    CHECK(p.sum_rate == doctest::Approx(c.sum_rate).epsilon(1e-13));
    CHECK(eval_oma_ma(draw, {}).sum_rate == doctest::Approx(eval_oma(draw).sum_rate).epsilon(1e-13));
}

TEST_CASE("optimized positions on scenario draws")
{
    ScenarioSpec spec;
    spec.master_seed = 11;
    const ScaConfig cfg;
    double proposed = 0.0;
    double conventional = 0.0;
    for (std::uint64_t t = 0; t < 30; ++t) {
        const auto draw = draw_scenario(spec, t);
        const auto p = eval_proposed(draw, cfg);
        const auto c = eval_conventional_noma(draw);
        const auto o = eval_oma(draw);
        const auto om = eval_oma_ma(draw, cfg);
        for (std::size_t i = 0; i < 2; ++i) {
            // The optimizer starts at the origin and never goes downhill.
            CHECK(p.gains[i] >= c.gains[i] * (1.0 - 1e-12));
            CHECK(draw.regions[i].contains(p.positions[i]));
            CHECK(p.positions[i] == om.positions[i]);
        }
        CHECK(c.positions[0] == Position2D{0.0, 0.0});
        CHECK(om.sum_rate >= o.sum_rate);
        CHECK(om.rate_user1 >= o.rate_user1);
        CHECK(om.rate_user2 >= o.rate_user2);
        proposed += p.sum_rate;
        conventional += c.sum_rate;
    }
    // Higher gains need not raise the NOMA sum rate on every draw, but they do on average.
    CHECK(proposed > conventional);
}
