// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// Random scenario generation and Monte Carlo sweeps.
//
// Trial t of master seed s draws from std::mt19937_64 seeded with
// std::seed_seq{lo(s), hi(s), lo(t), hi(t)}. Per user (user 1 first) it
// consumes, in order: L transmit paths (elevation, azimuth), L receive paths
// (elevation, azimuth), then L diagonal PRM entries (real, imaginary); one
// more 64-bit output seeds the SCA multistart points. Channel draws do not
// depend on power or region size, so sweeps reuse identical channels at every
// sweep point.

#ifndef MANA_SCENARIO_HPP
#define MANA_SCENARIO_HPP

#include "mana/schemes.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace mana {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScenarioSpec {
    std::size_t n_antennas = 16;
    std::array<double, 2> distances{60.0, 100.0};  // m
    double carrier_wavelength = 0.1;               // m
    std::size_t path_count = 10;
    double path_loss_exponent = 2.8;
    double noise_power = 1e-12;      // W (-90 dBm)
    double sinr_threshold = 10.0;    // linear (10 dB)
    double region_half_side = 0.15;  // m (A = 3 lambda)
    double total_power = 1.0;        // W (30 dBm)
    std::uint64_t master_seed = 42;

    /// (lambda / 4 pi)^2, recomputed from the wavelength on every call.
    [[nodiscard]] double reference_gain() const;
    [[nodiscard]] double per_antenna_power() const;
    /// Average power of one PRM entry for a user at distance d.
    [[nodiscard]] double path_variance(double distance) const;
    /// Throws ConfigError naming the offending field.
    void validate() const;
};

[[nodiscard]] ScenarioDraw draw_scenario(const ScenarioSpec& spec, std::uint64_t trial_index);

struct TrialRecord {
    std::uint64_t trial_index = 0;
    std::array<SchemeResult, 4> results;  // indexed like kAllSchemes

    [[nodiscard]] const SchemeResult& of(Scheme s) const;
};

struct SchemeStats {
    Scheme scheme = Scheme::ProposedMaNoma;
    double mean_sum_rate = 0.0;
    double mean_rate_user1 = 0.0;
    double mean_rate_user2 = 0.0;
    double outage_prob_user1 = 0.0;
    double outage_prob_user2 = 0.0;
    std::size_t trials = 0;
};

struct AggregateStats {
    std::array<SchemeStats, 4> per_scheme;  // indexed like kAllSchemes
    std::size_t trial_count = 0;

    [[nodiscard]] const SchemeStats& of(Scheme s) const;
};

[[nodiscard]] TrialRecord run_trial(const ScenarioDraw& draw, const ScaConfig& cfg);

/// Runs trials 0..trials-1 on up to `threads` workers (0 = hardware
/// concurrency). The result is ordered by trial index and independent of the
/// thread count.
[[nodiscard]] std::vector<TrialRecord> run_trials(const ScenarioSpec& spec, std::size_t trials,
                                                  const ScaConfig& cfg, unsigned threads = 0);

/// Throws ConfigError on an empty record list.
[[nodiscard]] AggregateStats aggregate(const std::vector<TrialRecord>& records);

enum class SweepAxis { region_size, total_power };

/// "region_size" or "total_power"; anything else throws ConfigError.
[[nodiscard]] SweepAxis parse_sweep_axis(std::string_view name);
[[nodiscard]] std::string_view to_string(SweepAxis axis);

/// Sweep values are A / lambda for region_size and dBm for total_power.
struct SweepSpec {
    SweepAxis axis = SweepAxis::region_size;
    std::vector<double> values;
};

struct SweepPoint {
    double value = 0.0;
    AggregateStats stats;
    std::vector<TrialRecord> records;
};

/// The spec with one sweep value applied.
[[nodiscard]] ScenarioSpec apply_sweep_value(const ScenarioSpec& spec, SweepAxis axis, double value);

[[nodiscard]] std::vector<SweepPoint> run_sweep(const ScenarioSpec& spec, const SweepSpec& sweep,
                                                std::size_t trials, const ScaConfig& cfg,
                                                unsigned threads = 0);

}  // namespace mana

#endif  // MANA_SCENARIO_HPP
