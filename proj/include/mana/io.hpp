// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// JSON run configuration and CSV result emission.

#ifndef MANA_IO_HPP
#define MANA_IO_HPP

#include "mana/position_sca.hpp"
#include "mana/scenario.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mana {

/// Run configuration in config-surface units: powers in dBm, thresholds in
/// dB, distances in meters, region size in wavelengths (A / lambda).
struct RunConfig {
    // system
    std::size_t antennas = 16;
    std::array<double, 2> distances_m{60.0, 100.0};
    double wavelength_m = 0.1;
    std::size_t paths = 10;
    double path_loss_exponent = 2.8;
    double noise_dbm = -90.0;
    double sinr_threshold_db = 10.0;
    double region_size_wavelengths = 3.0;
    double total_power_dbm = 30.0;
    // sca
    double damping = 0.9;
    double tolerance_m = 1e-6;
    int max_iterations = 200;
    int multistart = 1;
    double delta_floor = 1e-18;
    // mc
    std::uint64_t seed = 42;
    std::size_t trials = 200;
    unsigned threads = 0;
    // sweep
    std::vector<double> region_sizes_wavelengths{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    std::vector<double> total_powers_dbm{20.0, 25.0, 30.0, 35.0, 40.0};
    // output
    std::string output_path;

    [[nodiscard]] ScenarioSpec scenario_spec() const;
    [[nodiscard]] ScaConfig sca_config() const;
    /// Throws ConfigError naming the first invalid field.
    void validate() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses and validates. Omitted keys keep their defaults; unknown keys,
/// wrong types and invalid values throw ConfigError.
[[nodiscard]] RunConfig parse_config(std::string_view json_text);

/// Canonical JSON with every field present.
[[nodiscard]] std::string serialize_config(const RunConfig& cfg);

/// Shortest decimal string that round-trips to the same double.
[[nodiscard]] std::string format_number(double v);

inline constexpr std::string_view kSweepCsvHeader =
    "sweep_value,scheme,mean_sum_rate,mean_rate_user1,mean_rate_user2,outage_prob_user1,outage_prob_user2,trials";
inline constexpr std::string_view kOutageCsvHeader =
    "sweep_value,scheme,outage_prob_user1,outage_prob_user2,trials";
inline constexpr std::string_view kSingleCsvHeader =
    "trial_index,scheme,x_user1,y_user1,x_user2,y_user2,gain_user1,gain_user2,case,alpha_s,"
    "rate_user1,rate_user2,sum_rate,outage_user1,outage_user2";

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points);
void write_outage_csv(std::ostream& os, const std::vector<SweepPoint>& points);
void write_single_csv(std::ostream& os, const TrialRecord& record);

}  // namespace mana

#endif  // MANA_IO_HPP
