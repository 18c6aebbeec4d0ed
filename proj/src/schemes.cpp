// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/schemes.hpp"

#include <cmath>
#include <complex>

namespace mana {

std::string_view to_string(Scheme s)
{
    switch (s) {
    case Scheme::ProposedMaNoma: return "proposed_ma_noma";
    case Scheme::ConventionalNoma: return "conventional_noma";
    case Scheme::ConventionalOma: return "conventional_oma";
    case Scheme::OmaMa: return "oma_ma";
    }
    return "?";
}

double oma_rate(double snr, double sinr_threshold)
{
    return snr >= sinr_threshold ? 0.5 * std::log2(1.0 + snr) : 0.0;
}

namespace {

std::array<Position2D, 2> optimized_positions(const ScenarioDraw& draw, const ScaConfig& cfg)
{
    std::array<Position2D, 2> out{};
    for (std::size_t i = 0; i < 2; ++i) {
        ScaConfig run_cfg = cfg;
        run_cfg.multistart_seed = draw.seed + i;
        const CouplingMatrix m = coupling_matrix(draw.array, draw.users[i]);
        out[i] = optimize_position({0.0, 0.0}, m, draw.users[i], draw.regions[i], run_cfg).position;
    }
    return out;
}

std::array<double, 2> gains_at(const ScenarioDraw& draw, const std::array<Position2D, 2>& positions)
{
    return {std::norm(channel_gain(positions[0], draw.array, draw.users[0])),
            std::norm(channel_gain(positions[1], draw.array, draw.users[1]))};
}

SchemeResult noma_result(Scheme scheme, const ScenarioDraw& draw, const std::array<Position2D, 2>& positions)
{
    SchemeResult res;
    res.scheme = scheme;
    res.positions = positions;
    res.gains = gains_at(draw, positions);

    const GainPair g = GainPair::from_user_gains(res.gains[0], res.gains[1]);
    const AllocationOutcome out = classify_and_allocate(g, draw.link);
    res.alpha_s = out.alpha_s;
    res.case_label = out.case_label;
    if (g.strong_user == 1) {
        res.rate_user1 = out.rate_strong;
        res.outage_user1 = out.outage_strong;
        res.rate_user2 = out.rate_weak;
        res.outage_user2 = out.outage_weak;
    } else {
        res.rate_user1 = out.rate_weak;
        res.outage_user1 = out.outage_weak;
        res.rate_user2 = out.rate_strong;
        res.outage_user2 = out.outage_strong;
    }
    res.sum_rate = res.rate_user1 + res.rate_user2;
    return res;
}

SchemeResult oma_result(Scheme scheme, const ScenarioDraw& draw, const std::array<Position2D, 2>& positions)
{
    SchemeResult res;
    res.scheme = scheme;
    res.positions = positions;
    res.gains = gains_at(draw, positions);
    const double rho = draw.link.snr_ratio;
    const double g0 = draw.link.sinr_threshold;
    res.rate_user1 = oma_rate(rho * res.gains[0], g0);
    res.rate_user2 = oma_rate(rho * res.gains[1], g0);
    res.outage_user1 = rho * res.gains[0] < g0;
    res.outage_user2 = rho * res.gains[1] < g0;
    res.sum_rate = res.rate_user1 + res.rate_user2;
    return res;
}

constexpr std::array<Position2D, 2> kOrigins{};

}  // namespace

SchemeResult eval_proposed(const ScenarioDraw& draw, const ScaConfig& cfg)
{
    return noma_result(Scheme::ProposedMaNoma, draw, optimized_positions(draw, cfg));
}

SchemeResult eval_conventional_noma(const ScenarioDraw& draw)
{
    return noma_result(Scheme::ConventionalNoma, draw, kOrigins);
}

SchemeResult eval_oma(const ScenarioDraw& draw) { return oma_result(Scheme::ConventionalOma, draw, kOrigins); }

SchemeResult eval_oma_ma(const ScenarioDraw& draw, const ScaConfig& cfg)
{
    return oma_result(Scheme::OmaMa, draw, optimized_positions(draw, cfg));
}

}  // namespace mana
