// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/power_allocation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mana {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

LinkBudget LinkBudget::from_powers(double per_antenna_power, double noise_power, double sinr_threshold)
{
    if (!positive_finite(per_antenna_power)) {
        throw std::invalid_argument("LinkBudget: per_antenna_power must be > 0");
    }
    if (!positive_finite(noise_power)) {
        throw std::invalid_argument("LinkBudget: noise_power must be > 0");
    }
    if (!positive_finite(sinr_threshold)) {
        throw std::invalid_argument("LinkBudget: sinr_threshold must be > 0");
    }
    return {per_antenna_power, noise_power, per_antenna_power / noise_power, sinr_threshold};
}

GainPair GainPair::from_user_gains(double gain_user1, double gain_user2)
{
    if (!(gain_user1 >= 0.0) || !(gain_user2 >= 0.0) || !std::isfinite(gain_user1) ||
        !std::isfinite(gain_user2)) {
        throw std::invalid_argument("GainPair: gains must be finite and >= 0");
    }
    if (gain_user1 >= gain_user2) {
        return {gain_user1, gain_user2, 1};
    }
    return {gain_user2, gain_user1, 2};
}

std::string_view to_string(AllocCase c)
{
    switch (c) {
    case AllocCase::I: return "I";
    case AllocCase::II: return "II";
    case AllocCase::III: return "III";
    case AllocCase::IV: return "IV";
    case AllocCase::V: return "V";
    }
    return "?";
}

AllocBounds alloc_bounds(const GainPair& g, const LinkBudget& lb)
{
    const double g0 = lb.sinr_threshold;
    if (g.strong_gain <= 0.0) {
        return {kInf, -kInf, -kInf};
    }
    const double s = lb.snr_ratio * g.strong_gain;
    AllocBounds b;
    b.lower = g0 / s;
    b.upper_strong = (s - g0) / (s * (1.0 + g0));
    if (g.weak_gain <= 0.0) {
        b.upper_weak = -kInf;
    } else {
        const double w = lb.snr_ratio * g.weak_gain;
        b.upper_weak = (w - g0) / (w * (1.0 + g0));
    }
    return b;
}

SinrRates sinr_and_rates(double alpha_s, const GainPair& g, const LinkBudget& lb)
{
    const double rho = lb.snr_ratio;
    SinrRates out;
    out.sinr_strong = rho * alpha_s * g.strong_gain;
    out.sinr_weak = rho * (1.0 - alpha_s) * g.weak_gain / (rho * alpha_s * g.weak_gain + 1.0);
    out.rate_strong = std::log2(1.0 + out.sinr_strong);
    out.rate_weak = std::log2(1.0 + out.sinr_weak);
    return out;
}

namespace {

AllocationOutcome finish(AllocCase label, double alpha_s, bool outage_strong, bool outage_weak,
                         const GainPair& g, const LinkBudget& lb)
{
    AllocationOutcome out;
    out.case_label = label;
    out.alpha_s = alpha_s;
    out.outage_strong = outage_strong;
    out.outage_weak = outage_weak;
    const SinrRates sr = sinr_and_rates(alpha_s, g, lb);
    out.sinr_strong = sr.sinr_strong;
    out.sinr_weak = sr.sinr_weak;
    out.rate_strong = outage_strong ? 0.0 : sr.rate_strong;
    out.rate_weak = outage_weak ? 0.0 : sr.rate_weak;
    return out;
}

}  // namespace

AllocationOutcome classify_and_allocate(const GainPair& g, const LinkBudget& lb)
{
    if (g.strong_gain <= 0.0) {
        return finish(AllocCase::V, 0.0, true, true, g, lb);
    }
    const AllocBounds b = alloc_bounds(g, lb);
    const double l1 = b.lower;
    const double mu1 = b.upper_strong;
    const double mu2 = b.upper_weak;

    if (l1 <= mu2 && mu2 <= mu1) {
        return finish(AllocCase::I, mu2, false, false, g, lb);
    }
    if (0.0 <= mu2 && mu2 < l1 && l1 <= 1.0) {
        const double g0 = lb.sinr_threshold;
        const double r1 = std::log2(1.0 + (lb.snr_ratio * g.strong_gain - g0) / (1.0 + g0));
        const double r2 = std::log2(1.0 + lb.snr_ratio * g.weak_gain);
        // The user in outage gets zero power.
        if (r1 > r2) {
            return finish(AllocCase::II, 1.0, false, true, g, lb);
        }
        return finish(AllocCase::II, 0.0, true, false, g, lb);
    }
    if (mu2 < 0.0 && 0.0 < l1 && l1 <= 1.0) {
        return finish(AllocCase::III, 1.0, false, true, g, lb);
    }
    // Unreachable when weak_gain <= strong_gain; kept for completeness.
    if (0.0 <= mu2 && mu2 < 1.0 && 1.0 < l1) {
        return finish(AllocCase::IV, 0.0, true, false, g, lb);
    }
    return finish(AllocCase::V, 0.0, true, true, g, lb);
}

double alloc_metric(double alpha_s, const GainPair& g, const LinkBudget& lb)
{
    const SinrRates sr = sinr_and_rates(alpha_s, g, lb);
    return (1.0 + sr.sinr_strong) * (1.0 + sr.sinr_weak);
}

double alloc_metric_derivative(double alpha_s, const GainPair& g, const LinkBudget& lb)
{
    const double rho = lb.snr_ratio;
    const double denom = rho * alpha_s * g.weak_gain + 1.0;
    return rho * (1.0 + rho * g.weak_gain) * std::abs(g.strong_gain - g.weak_gain) / (denom * denom);
}

}  // namespace mana
