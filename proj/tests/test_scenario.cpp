// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/scenario.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace mana;

namespace {

void check_same(const TrialRecord& a, const TrialRecord& b)
{
    REQUIRE(a.trial_index == b.trial_index);
    for (std::size_t s = 0; s < 4; ++s) {
        const auto& x = a.results[s];
        const auto& y = b.results[s];
        REQUIRE(x.scheme == y.scheme);
        REQUIRE(x.rate_user1 == y.rate_user1);
        REQUIRE(x.rate_user2 == y.rate_user2);
        REQUIRE(x.sum_rate == y.sum_rate);
        REQUIRE(x.outage_user1 == y.outage_user1);
        REQUIRE(x.outage_user2 == y.outage_user2);
        REQUIRE(x.positions == y.positions);
        REQUIRE(x.gains == y.gains);
    }
}

// Mean of |sum_t exp(j k (t_x u + t_y v))|^2 with u = cos(el) sin(az),
// v = sin(el), and el, az uniform on (-pi/2, pi/2), by the midpoint rule.
double mean_array_factor(const AntennaArray& array, double wavelength, int n)
{
    const double k = 2.0 * std::numbers::pi / wavelength;
    const double h = std::numbers::pi / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double el = -std::numbers::pi / 2 + (i + 0.5) * h;
        for (int j = 0; j < n; ++j) {
            const double az = -std::numbers::pi / 2 + (j + 0.5) * h;
            const double u = std::cos(el) * std::sin(az);
            const double v = std::sin(el);
            std::complex<double> a = 0.0;
            for (const auto& t : array.elements()) {
                a += std::polar(1.0, k * (t.x * u + t.y * v));
            }
            acc += std::norm(a);
        }
    }
    return acc / (static_cast<double>(n) * n);
}

}  // namespace

TEST_CASE("scenario defaults and validation")
{
    const ScenarioSpec spec;
    CHECK(spec.reference_gain() == doctest::Approx(std::pow(0.1 / (4.0 * std::numbers::pi), 2)).epsilon(1e-15));
    CHECK(spec.per_antenna_power() == 1.0 / 16.0);
    CHECK(spec.path_variance(60.0) ==
          doctest::Approx(spec.reference_gain() * std::pow(60.0, -2.8) / 10.0).epsilon(1e-15));
    CHECK_NOTHROW(spec.validate());

    ScenarioSpec bad = spec;
    bad.path_count = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = spec;
    bad.noise_power = -1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = spec;
    bad.region_half_side = -0.1;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = spec;
    bad.region_half_side = 0.0;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("draws")
{
    ScenarioSpec spec;
    SUBCASE("pure function of seed and trial index")
    {
        const auto a = draw_scenario(spec, 17);
        const auto b = draw_scenario(spec, 17);
        const auto c = draw_scenario(spec, 18);
        CHECK(a.users[0].prm() == b.users[0].prm());
        CHECK(a.users[1].rx_paths()[3].azimuth == b.users[1].rx_paths()[3].azimuth);
        CHECK(a.seed == b.seed);
        CHECK(a.users[0].prm() != c.users[0].prm());
        spec.master_seed = 43;
        CHECK(draw_scenario(spec, 17).users[0].prm() != a.users[0].prm());
    }
    SUBCASE("channels ignore power and region size")
    {
        const auto a = draw_scenario(spec, 5);
        const auto b = draw_scenario(apply_sweep_value(apply_sweep_value(spec, SweepAxis::total_power, 40.0),
                                                       SweepAxis::region_size, 0.5),
                                     5);
        CHECK(a.users[1].prm() == b.users[1].prm());
        CHECK(a.seed == b.seed);
        CHECK(b.regions[0].half_side() == doctest::Approx(0.025));
        CHECK(b.link.per_antenna_power == doctest::Approx(10.0 / 16.0));
    }
    SUBCASE("geometry")
    {
        const auto d = draw_scenario(spec, 0);
        CHECK(d.array.size() == 16);
        CHECK(d.regions[0].half_side() == 0.15);
        CHECK(d.link.noise_power == 1e-12);
        CHECK(d.link.sinr_threshold == 10.0);
        CHECK(d.users[0].prm().rows() == 10);
    }
}

TEST_CASE("draw statistics")
{
    const ScenarioSpec spec;
    const int draws = 10000;
    double prm_power[2] = {0.0, 0.0};
    double origin_power[2] = {0.0, 0.0};
    double angle_min = 0.0;
    double angle_max = 0.0;
    std::size_t off_diagonal_nonzero = 0;
    for (int t = 0; t < draws; ++t) {
        const auto d = draw_scenario(spec, static_cast<std::uint64_t>(t));
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& prm = d.users[i].prm();
            for (Eigen::Index r = 0; r < prm.rows(); ++r) {
                for (Eigen::Index c = 0; c < prm.cols(); ++c) {
                    if (r == c) {
                        prm_power[i] += std::norm(prm(r, c));
                    } else if (prm(r, c) != Complex(0.0, 0.0)) {
                        ++off_diagonal_nonzero;
                    }
                }
            }
            for (const auto* paths : {&d.users[i].tx_paths(), &d.users[i].rx_paths()}) {
                for (const auto& p : *paths) {
                    angle_min = std::min({angle_min, p.elevation, p.azimuth});
                    angle_max = std::max({angle_max, p.elevation, p.azimuth});
                }
            }
            origin_power[i] += std::norm(channel_gain({0.0, 0.0}, d.array, d.users[i]));
        }
    }
    CHECK(off_diagonal_nonzero == 0);
    CHECK(angle_min >= -std::numbers::pi / 2);
    CHECK(angle_max <= std::numbers::pi / 2);
    CHECK(angle_min < -1.5);
    CHECK(angle_max > 1.5);

    const double af = mean_array_factor(AntennaArray::uniform_planar(16, 0.05), 0.1, 600);
    for (std::size_t i = 0; i < 2; ++i) {
        const double var = spec.path_variance(spec.distances[i]);
        CHECK(std::abs(prm_power[i] / (draws * 10.0) / var - 1.0) < 0.02);
        const double expected = spec.reference_gain() * std::pow(spec.distances[i], -spec.path_loss_exponent) * af;
        CHECK(std::abs(origin_power[i] / draws / expected - 1.0) < 0.05);
    }
    // The array factor is well below N for this geometry, so N c0 d^-beta is not the origin mean.
    CHECK(af < 0.6 * 16.0);
}

TEST_CASE("parallel trials")
{
    ScenarioSpec spec;
    spec.master_seed = 3;
    const ScaConfig cfg;
    const auto one = run_trials(spec, 12, cfg, 1);
    const auto three = run_trials(spec, 12, cfg, 3);
    const auto many = run_trials(spec, 12, cfg, 64);
    REQUIRE(one.size() == 12);
    for (std::size_t t = 0; t < one.size(); ++t) {
        CHECK(one[t].trial_index == t);
        check_same(one[t], three[t]);
        check_same(one[t], many[t]);
    }
    CHECK(run_trials(spec, 0, cfg, 2).empty());

    ScaConfig bad;
    bad.damping = 0.0;
    CHECK_THROWS((void)run_trials(spec, 2, bad, 1));
}

TEST_CASE("aggregate")
{
    ScenarioSpec spec;
    const ScaConfig cfg;
    SUBCASE("single record")
    {
        const auto recs = run_trials(spec, 1, cfg, 1);
        const auto st = aggregate(recs);
        CHECK(st.trial_count == 1);
        for (std::size_t s = 0; s < 4; ++s) {
            CHECK(st.per_scheme[s].scheme == kAllSchemes[s]);
            CHECK(st.per_scheme[s].mean_rate_user1 == recs[0].results[s].rate_user1);
            CHECK(st.per_scheme[s].mean_sum_rate == doctest::Approx(recs[0].results[s].sum_rate).epsilon(1e-15));
            CHECK(st.per_scheme[s].outage_prob_user2 == (recs[0].results[s].outage_user2 ? 1.0 : 0.0));
        }
        CHECK(&st.of(Scheme::OmaMa) == &st.per_scheme[3]);
        CHECK(recs[0].of(Scheme::ConventionalOma).scheme == Scheme::ConventionalOma);
    }
    SUBCASE("all outage")
    {
        spec.total_power = 1e-9;
        const auto st = aggregate(run_trials(spec, 5, cfg, 1));
        for (const auto& s : st.per_scheme) {
            CHECK(s.mean_sum_rate == 0.0);
            CHECK(s.outage_prob_user1 == 1.0);
            CHECK(s.outage_prob_user2 == 1.0);
            CHECK(s.trials == 5);
        }
    }
    SUBCASE("matches one-pass summation")
    {
        const auto recs = run_trials(spec, 200, cfg, 0);
        const auto st = aggregate(recs);
        for (std::size_t s = 0; s < 4; ++s) {
            long double sum = 0.0L;
            std::size_t out1 = 0;
            for (const auto& r : recs) {
                sum += r.results[s].sum_rate;
                out1 += r.results[s].outage_user1;
            }
            CHECK(st.per_scheme[s].mean_sum_rate == doctest::Approx(static_cast<double>(sum / 200.0L)).epsilon(1e-13));
            CHECK(st.per_scheme[s].outage_prob_user1 == static_cast<double>(out1) / 200.0);
        }
    }
    CHECK_THROWS_AS((void)aggregate({}), ConfigError);
}

TEST_CASE("sweeps")
{
    CHECK(parse_sweep_axis("region_size") == SweepAxis::region_size);
    CHECK(parse_sweep_axis("total_power") == SweepAxis::total_power);
    CHECK_THROWS_AS((void)parse_sweep_axis("power"), ConfigError);
    CHECK(to_string(SweepAxis::total_power) == "total_power");

    const ScenarioSpec spec;
    const ScaConfig cfg;
    CHECK_THROWS_AS((void)run_sweep(spec, {SweepAxis::region_size, {}}, 3, cfg, 1), ConfigError);
    CHECK_THROWS_AS((void)run_sweep(spec, {SweepAxis::region_size, {1.0}}, 0, cfg, 1), ConfigError);
    CHECK_THROWS_AS((void)run_sweep(spec, {SweepAxis::region_size, {-1.0}}, 2, cfg, 1), ConfigError);

    SUBCASE("zero region reproduces the fixed antenna")
    {
        const auto pts = run_sweep(spec, {SweepAxis::region_size, {0.0, 1.0}}, 20, cfg, 1);
        REQUIRE(pts.size() == 2);
        for (const auto& r : pts[0].records) {
            CHECK(r.of(Scheme::ProposedMaNoma).sum_rate == r.of(Scheme::ConventionalNoma).sum_rate);
            CHECK(r.of(Scheme::OmaMa).sum_rate == r.of(Scheme::ConventionalOma).sum_rate);
        }
        // Identical channels at both sweep points.
        CHECK(pts[0].records[4].of(Scheme::ConventionalNoma).sum_rate ==
              pts[1].records[4].of(Scheme::ConventionalNoma).sum_rate);
    }
    SUBCASE("OMA rates rise with power on every draw")
    {
        const auto pts = run_sweep(spec, {SweepAxis::total_power, {20.0, 30.0, 40.0}}, 30, cfg, 1);
        for (std::size_t t = 0; t < 30; ++t) {
            for (std::size_t j = 1; j < pts.size(); ++j) {
                CHECK(pts[j].records[t].of(Scheme::ConventionalOma).sum_rate >=
                      pts[j - 1].records[t].of(Scheme::ConventionalOma).sum_rate);
            }
        }
    }
}
