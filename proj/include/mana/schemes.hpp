// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// The four transmission schemes evaluated on one channel draw.

#ifndef MANA_SCHEMES_HPP
#define MANA_SCHEMES_HPP

#include "mana/field_channel.hpp"
#include "mana/position_sca.hpp"
#include "mana/power_allocation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace mana {

/// One realization of both users' channels plus the link budget.
struct ScenarioDraw {
    std::array<UserChannelModel, 2> users;
    AntennaArray array;
    LinkBudget link;
    std::array<MoveRegion, 2> regions;
    std::uint64_t trial_index = 0;
    /// Seeds the SCA multistart points; user i uses seed + i.
    std::uint64_t seed = 0;
};

enum class Scheme { ProposedMaNoma, ConventionalNoma, ConventionalOma, OmaMa };

inline constexpr std::array<Scheme, 4> kAllSchemes = {Scheme::ProposedMaNoma, Scheme::ConventionalNoma,
                                                      Scheme::ConventionalOma, Scheme::OmaMa};

[[nodiscard]] std::string_view to_string(Scheme s);

struct SchemeResult {
    Scheme scheme = Scheme::ProposedMaNoma;
    double rate_user1 = 0.0;  // bits/s/Hz
    double rate_user2 = 0.0;
    double sum_rate = 0.0;
    bool outage_user1 = false;
    bool outage_user2 = false;
    std::optional<double> alpha_s;  // NOMA schemes only
    std::array<Position2D, 2> positions{};
    std::array<double, 2> gains{};  // |h_i|^2 at positions[i]
    std::optional<AllocCase> case_label;
};

/// MA positions optimized per user, then NOMA allocation on the optimized gains.
[[nodiscard]] SchemeResult eval_proposed(const ScenarioDraw& draw, const ScaConfig& cfg);
/// Both users at their local origins with NOMA allocation.
[[nodiscard]] SchemeResult eval_conventional_noma(const ScenarioDraw& draw);
/// Equal-share TDMA at per-antenna power P0; outage below the SINR threshold.
[[nodiscard]] SchemeResult eval_oma(const ScenarioDraw& draw);
/// eval_oma with each user's position optimized first.
[[nodiscard]] SchemeResult eval_oma_ma(const ScenarioDraw& draw, const ScaConfig& cfg);

/// Single-user OMA rate: 0.5 * log2(1 + snr) when snr >= threshold, else 0.
[[nodiscard]] double oma_rate(double snr, double sinr_threshold);

}  // namespace mana

#endif  // MANA_SCHEMES_HPP
