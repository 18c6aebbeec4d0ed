// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// mana-sim command line:
//   mana-sim single        one trial, every scheme
//   mana-sim sweep-region  mean rates vs. region size (A / lambda)
//   mana-sim sweep-power   mean rates vs. total transmit power (dBm)
//   mana-sim outage        outage probabilities vs. total transmit power
//   mana-sim validate      oracle self-checks
//
// Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 validation failure.

#include "mana/io.hpp"
#include "mana/scenario.hpp"
#include "mana/validation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;
constexpr int kExitValidation = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<unsigned> threads;
    std::uint64_t trial_index = 0;
};

mana::RunConfig load_config(const Options& opt)
{
    std::string text = "{}";
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) {
            throw IoError("cannot read config file " + opt.config_path);
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    mana::RunConfig cfg = mana::parse_config(text);
    if (opt.seed) {
        cfg.seed = *opt.seed;
    }
    if (opt.trials) {
        cfg.trials = *opt.trials;
    }
    if (opt.threads) {
        cfg.threads = *opt.threads;
    }
    if (!opt.out_path.empty()) {
        cfg.output_path = opt.out_path;
    }
    cfg.validate();
    return cfg;
}

// Renders into memory first so a failed run never leaves a partial file.
template <typename Writer>
void emit(const mana::RunConfig& cfg, Writer&& write)
{
    std::ostringstream buffer;
    write(buffer);
    if (cfg.output_path.empty()) {
        std::cout << buffer.str();
        return;
    }
    std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open output file " + cfg.output_path);
    }
    out << buffer.str();
    if (!out.flush()) {
        throw IoError("failed writing " + cfg.output_path);
    }
}

std::vector<mana::SweepPoint> sweep(const mana::RunConfig& cfg, mana::SweepAxis axis)
{
    mana::SweepSpec spec;
    spec.axis = axis;
    spec.values = axis == mana::SweepAxis::region_size ? cfg.region_sizes_wavelengths : cfg.total_powers_dbm;
    return mana::run_sweep(cfg.scenario_spec(), spec, cfg.trials, cfg.sca_config(), cfg.threads);
}

int run(const std::string& command, const Options& opt)
{
    const mana::RunConfig cfg = load_config(opt);
    if (command == "single") {
        const auto draw = mana::draw_scenario(cfg.scenario_spec(), opt.trial_index);
        const auto record = mana::run_trial(draw, cfg.sca_config());
        emit(cfg, [&](std::ostream& os) { mana::write_single_csv(os, record); });
    } else if (command == "sweep-region") {
        const auto points = sweep(cfg, mana::SweepAxis::region_size);
        emit(cfg, [&](std::ostream& os) { mana::write_sweep_csv(os, points); });
    } else if (command == "sweep-power") {
        const auto points = sweep(cfg, mana::SweepAxis::total_power);
        emit(cfg, [&](std::ostream& os) { mana::write_sweep_csv(os, points); });
    } else if (command == "outage") {
        const auto points = sweep(cfg, mana::SweepAxis::total_power);
        emit(cfg, [&](std::ostream& os) { mana::write_outage_csv(os, points); });
    } else if (command == "validate") {
        const auto results = mana::validation::run_quick_suite(cfg.scenario_spec());
        bool ok = true;
        emit(cfg, [&](std::ostream& os) { mana::validation::print_report(os, results); });
        for (const auto& r : results) {
            ok = ok && r.passed;
        }
        return ok ? 0 : kExitValidation;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Movable-antenna NOMA downlink simulator"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "JSON configuration file");
        sub->add_option("--out", opt.out_path, "Output path (default: config output.path, else stdout)");
        sub->add_option("--seed", opt.seed, "Master seed (overrides mc.seed)");
        sub->add_option("--trials", opt.trials, "Monte Carlo trials (overrides mc.trials)");
        sub->add_option("--threads", opt.threads, "Worker threads, 0 = all cores (overrides mc.threads)");
    };

    std::vector<std::pair<std::string, CLI::App*>> commands;
    for (const auto& [name, help] :
         std::initializer_list<std::pair<const char*, const char*>>{
             {"single", "Evaluate every scheme on one trial"},
             {"sweep-region", "Mean rates versus normalized region size"},
             {"sweep-power", "Mean rates versus total transmit power"},
             {"outage", "Outage probabilities versus total transmit power"},
             {"validate", "Run the oracle self-checks"}}) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub);
        commands.emplace_back(name, sub);
    }
    commands.front().second->add_option("--trial", opt.trial_index, "Trial index to evaluate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    std::string command;
    for (const auto& [name, sub] : commands) {
        if (sub->parsed()) {
            command = name;
        }
    }

    try {
        return run(command, opt);
    } catch (const mana::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
}
