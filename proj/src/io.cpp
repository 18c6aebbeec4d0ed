// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/io.hpp"

#include "mana/units.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>

namespace mana {

using nlohmann::json;

namespace {

void require_positive(double v, const char* field)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(field) + " must be finite and > 0");
    }
}

void require_finite(double v, const char* field)
{
    if (!std::isfinite(v)) {
        throw ConfigError(std::string(field) + " must be finite");
    }
}

// Reads the keys of one config section, rejecting anything not listed.
class Section {
public:
    Section(const json& root, const char* name) : name_(name)
    {
        if (!root.contains(name)) {
            return;
        }
        node_ = &root.at(name);
        if (!node_->is_object()) {
            throw ConfigError(std::string(name) + " must be an object");
        }
    }

    void number(const char* key, double& out)
    {
        if (const json* v = find(key)) {
            if (!v->is_number()) {
                throw ConfigError(field(key) + " must be a number");
            }
            out = v->get<double>();
        }
    }

    template <typename Int>
    void count(const char* key, Int& out)
    {
        if (const json* v = find(key)) {
            if (v->is_number_unsigned()) {
                const auto raw = v->get<std::uint64_t>();
                if (raw > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
                    throw ConfigError(field(key) + " is out of range");
                }
                out = static_cast<Int>(raw);
                return;
            }
            if (v->is_number_integer()) {
                const auto raw = v->get<std::int64_t>();
                if constexpr (std::is_signed_v<Int>) {
                    if (raw >= std::numeric_limits<Int>::min() && raw <= std::numeric_limits<Int>::max()) {
                        out = static_cast<Int>(raw);
                        return;
                    }
                }
                throw ConfigError(field(key) + " must be a non-negative integer");
            }
            throw ConfigError(field(key) + " must be an integer");
        }
    }

    void numbers(const char* key, std::vector<double>& out)
    {
        if (const json* v = find(key)) {
            if (!v->is_array()) {
                throw ConfigError(field(key) + " must be an array of numbers");
            }
            std::vector<double> values;
            for (const auto& e : *v) {
                if (!e.is_number()) {
                    throw ConfigError(field(key) + " must be an array of numbers");
                }
                values.push_back(e.get<double>());
            }
            out = std::move(values);
        }
    }

    void string(const char* key, std::string& out)
    {
        if (const json* v = find(key)) {
            if (!v->is_string()) {
                throw ConfigError(field(key) + " must be a string");
            }
            out = v->get<std::string>();
        }
    }

    void finish() const
    {
        if (node_ == nullptr) {
            return;
        }
        for (const auto& [key, value] : node_->items()) {
            if (!seen_.contains(key)) {
                throw ConfigError("unknown key " + field(key.c_str()));
            }
        }
    }

private:
    const json* find(const char* key)
    {
        seen_.insert(key);
        if (node_ == nullptr || !node_->contains(key)) {
            return nullptr;
        }
        return &node_->at(key);
    }

    [[nodiscard]] std::string field(const char* key) const { return std::string(name_) + "." + key; }

    const char* name_;
    const json* node_ = nullptr;
    std::set<std::string> seen_;
};

}  // namespace

ScenarioSpec RunConfig::scenario_spec() const
{
    ScenarioSpec s;
    s.n_antennas = antennas;
    s.distances = distances_m;
    s.carrier_wavelength = wavelength_m;
    s.path_count = paths;
    s.path_loss_exponent = path_loss_exponent;
    s.noise_power = dbm_to_watts(noise_dbm);
    s.sinr_threshold = db_to_linear(sinr_threshold_db);
    s.region_half_side = 0.5 * region_size_wavelengths * wavelength_m;
    s.total_power = dbm_to_watts(total_power_dbm);
    s.master_seed = seed;
    return s;
}

ScaConfig RunConfig::sca_config() const
{
    ScaConfig c;
    c.damping = damping;
    c.tolerance = tolerance_m;
    c.max_iterations = max_iterations;
    c.multistart_count = multistart;
    c.delta_floor = delta_floor;
    return c;
}

void RunConfig::validate() const
{
    if (antennas < 1) {
        throw ConfigError("system.antennas must be >= 1");
    }
    if (paths < 1) {
        throw ConfigError("system.paths must be >= 1");
    }
    require_positive(distances_m[0], "system.distances_m[0]");
    require_positive(distances_m[1], "system.distances_m[1]");
    require_positive(wavelength_m, "system.wavelength_m");
    require_positive(path_loss_exponent, "system.path_loss_exponent");
    require_finite(noise_dbm, "system.noise_dbm");
    require_finite(sinr_threshold_db, "system.sinr_threshold_db");
    require_finite(total_power_dbm, "system.total_power_dbm");
    if (!(region_size_wavelengths >= 0.0) || !std::isfinite(region_size_wavelengths)) {
        throw ConfigError("system.region_size_wavelengths must be finite and >= 0");
    }
    if (!(damping > 0.0 && damping <= 1.0)) {
        throw ConfigError("sca.damping must lie in (0, 1]");
    }
    require_positive(tolerance_m, "sca.tolerance_m");
    if (max_iterations < 1) {
        throw ConfigError("sca.max_iterations must be >= 1");
    }
    if (multistart < 1) {
        throw ConfigError("sca.multistart must be >= 1");
    }
    if (!(delta_floor >= 0.0) || !std::isfinite(delta_floor)) {
        throw ConfigError("sca.delta_floor must be finite and >= 0");
    }
    if (trials < 1) {
        throw ConfigError("mc.trials must be >= 1");
    }
    if (region_sizes_wavelengths.empty()) {
        throw ConfigError("sweep.region_sizes_wavelengths must not be empty");
    }
    for (double v : region_sizes_wavelengths) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw ConfigError("sweep.region_sizes_wavelengths entries must be finite and >= 0");
        }
    }
    if (total_powers_dbm.empty()) {
        throw ConfigError("sweep.total_powers_dbm must not be empty");
    }
    for (double v : total_powers_dbm) {
        require_finite(v, "sweep.total_powers_dbm");
    }
}

RunConfig parse_config(std::string_view json_text)
{
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }
    for (const auto& [key, value] : root.items()) {
        static const std::set<std::string> sections{"system", "sca", "mc", "sweep", "output"};
        if (!sections.contains(key)) {
            throw ConfigError("unknown key " + key);
        }
    }

    RunConfig cfg;
    Section system(root, "system");
    system.count("antennas", cfg.antennas);
    std::vector<double> distances(cfg.distances_m.begin(), cfg.distances_m.end());
    system.numbers("distances_m", distances);
    if (distances.size() != 2) {
        throw ConfigError("system.distances_m must hold exactly two values");
    }
    cfg.distances_m = {distances[0], distances[1]};
    system.number("wavelength_m", cfg.wavelength_m);
    system.count("paths", cfg.paths);
    system.number("path_loss_exponent", cfg.path_loss_exponent);
    system.number("noise_dbm", cfg.noise_dbm);
    system.number("sinr_threshold_db", cfg.sinr_threshold_db);
    system.number("region_size_wavelengths", cfg.region_size_wavelengths);
    system.number("total_power_dbm", cfg.total_power_dbm);
    system.finish();

    Section sca(root, "sca");
    sca.number("damping", cfg.damping);
    sca.number("tolerance_m", cfg.tolerance_m);
    sca.count("max_iterations", cfg.max_iterations);
    sca.count("multistart", cfg.multistart);
    sca.number("delta_floor", cfg.delta_floor);
    sca.finish();

    Section mc(root, "mc");
    mc.count("seed", cfg.seed);
    mc.count("trials", cfg.trials);
    mc.count("threads", cfg.threads);
    mc.finish();

    Section sweep(root, "sweep");
    sweep.numbers("region_sizes_wavelengths", cfg.region_sizes_wavelengths);
    sweep.numbers("total_powers_dbm", cfg.total_powers_dbm);
    sweep.finish();

    Section output(root, "output");
    output.string("path", cfg.output_path);
    output.finish();

    cfg.validate();
    return cfg;
}

std::string serialize_config(const RunConfig& cfg)
{
    json root;
    root["system"] = {
        {"antennas", cfg.antennas},
        {"distances_m", {cfg.distances_m[0], cfg.distances_m[1]}},
        {"wavelength_m", cfg.wavelength_m},
        {"paths", cfg.paths},
        {"path_loss_exponent", cfg.path_loss_exponent},
        {"noise_dbm", cfg.noise_dbm},
        {"sinr_threshold_db", cfg.sinr_threshold_db},
        {"region_size_wavelengths", cfg.region_size_wavelengths},
        {"total_power_dbm", cfg.total_power_dbm},
    };
    root["sca"] = {
        {"damping", cfg.damping},
        {"tolerance_m", cfg.tolerance_m},
        {"max_iterations", cfg.max_iterations},
        {"multistart", cfg.multistart},
        {"delta_floor", cfg.delta_floor},
    };
    root["mc"] = {{"seed", cfg.seed}, {"trials", cfg.trials}, {"threads", cfg.threads}};
    root["sweep"] = {{"region_sizes_wavelengths", cfg.region_sizes_wavelengths},
                     {"total_powers_dbm", cfg.total_powers_dbm}};
    root["output"] = {{"path", cfg.output_path}};
    return root.dump(2);
}

std::string format_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

void write_stats_row(std::ostream& os, double sweep_value, const SchemeStats& s, bool outage_only)
{
    os << format_number(sweep_value) << ',' << to_string(s.scheme) << ',';
    if (!outage_only) {
        os << format_number(s.mean_sum_rate) << ',' << format_number(s.mean_rate_user1) << ','
           << format_number(s.mean_rate_user2) << ',';
    }
    os << format_number(s.outage_prob_user1) << ',' << format_number(s.outage_prob_user2) << ',' << s.trials
       << '\n';
}

}  // namespace

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points)
{
    os << kSweepCsvHeader << '\n';
    for (const auto& p : points) {
        for (const auto& s : p.stats.per_scheme) {
            write_stats_row(os, p.value, s, false);
        }
    }
}

void write_outage_csv(std::ostream& os, const std::vector<SweepPoint>& points)
{
    os << kOutageCsvHeader << '\n';
    for (const auto& p : points) {
        for (const auto& s : p.stats.per_scheme) {
            write_stats_row(os, p.value, s, true);
        }
    }
}

void write_single_csv(std::ostream& os, const TrialRecord& record)
{
    os << kSingleCsvHeader << '\n';
    for (const auto& r : record.results) {
        os << record.trial_index << ',' << to_string(r.scheme) << ',' << format_number(r.positions[0].x) << ','
           << format_number(r.positions[0].y) << ',' << format_number(r.positions[1].x) << ','
           << format_number(r.positions[1].y) << ',' << format_number(r.gains[0]) << ','
           << format_number(r.gains[1]) << ',' << (r.case_label ? to_string(*r.case_label) : "") << ','
           << (r.alpha_s ? format_number(*r.alpha_s) : "") << ',' << format_number(r.rate_user1) << ','
           << format_number(r.rate_user2) << ',' << format_number(r.sum_rate) << ',' << (r.outage_user1 ? 1 : 0)
           << ',' << (r.outage_user2 ? 1 : 0) << '\n';
    }
}

}  // namespace mana
