// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// Closed-form two-user NOMA power allocation. The strong user (SU) decodes
// and cancels the weak user's (WU) signal first; alpha_s is the fraction of
// power given to the SU.

#ifndef MANA_POWER_ALLOCATION_HPP
#define MANA_POWER_ALLOCATION_HPP

#include <string_view>

namespace mana {

struct LinkBudget {
    double per_antenna_power = 0.0;  // W
    double noise_power = 0.0;        // W
    double snr_ratio = 0.0;          // per_antenna_power / noise_power
    double sinr_threshold = 0.0;     // linear

    /// Throws std::invalid_argument unless every input is finite and > 0.
    static LinkBudget from_powers(double per_antenna_power, double noise_power, double sinr_threshold);
};

struct GainPair {
    double strong_gain = 0.0;
    double weak_gain = 0.0;
    int strong_user = 1;  // 1 or 2; ties go to user 1

    /// Orders |h1|^2 and |h2|^2. Throws std::invalid_argument on negative or
    /// non-finite gains.
    static GainPair from_user_gains(double gain_user1, double gain_user2);

    [[nodiscard]] int weak_user() const { return strong_user == 1 ? 2 : 1; }
};

struct AllocBounds {
    double lower = 0.0;         // l1: SU decodable
    double upper_strong = 0.0;  // mu1: WU signal decodable at the SU
    double upper_weak = 0.0;    // mu2: WU decodable at the WU
};

enum class AllocCase { I, II, III, IV, V };

[[nodiscard]] std::string_view to_string(AllocCase c);

struct AllocationOutcome {
    AllocCase case_label = AllocCase::V;
    double alpha_s = 0.0;
    double sinr_strong = 0.0;
    double sinr_weak = 0.0;
    double rate_strong = 0.0;
    double rate_weak = 0.0;
    bool outage_strong = true;
    bool outage_weak = true;

    [[nodiscard]] double sum_rate() const { return rate_strong + rate_weak; }
};

struct SinrRates {
    double sinr_strong = 0.0;
    double sinr_weak = 0.0;
    double rate_strong = 0.0;
    double rate_weak = 0.0;
};

/// l1, mu1, mu2. A zero strong gain yields lower = +inf and both upper
/// bounds -inf; a zero weak gain yields upper_weak = -inf.
[[nodiscard]] AllocBounds alloc_bounds(const GainPair& g, const LinkBudget& lb);

/// Case I-V classification followed by the coefficient rule of that case.
/// Rates of users in outage are zero.
[[nodiscard]] AllocationOutcome classify_and_allocate(const GainPair& g, const LinkBudget& lb);

/// SINRs and Shannon rates for a given alpha_s in [0, 1].
[[nodiscard]] SinrRates sinr_and_rates(double alpha_s, const GainPair& g, const LinkBudget& lb);

/// m(alpha_s) = (1 + gamma_s)(1 + gamma_w).
[[nodiscard]] double alloc_metric(double alpha_s, const GainPair& g, const LinkBudget& lb);
/// dm/dalpha_s; never negative.
[[nodiscard]] double alloc_metric_derivative(double alpha_s, const GainPair& g, const LinkBudget& lb);

}  // namespace mana

#endif  // MANA_POWER_ALLOCATION_HPP
