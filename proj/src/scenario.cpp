// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/scenario.hpp"

#include "mana/random.hpp"
#include "mana/units.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace mana {

namespace {

void require_positive(double v, const char* field)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ConfigError(std::string(field) + " must be finite and > 0");
    }
}

std::size_t scheme_index(Scheme s)
{
    return static_cast<std::size_t>(std::find(kAllSchemes.begin(), kAllSchemes.end(), s) - kAllSchemes.begin());
}

std::vector<PathAngles> draw_paths(std::mt19937_64& engine, std::size_t count)
{
    constexpr double half_pi = std::numbers::pi / 2.0;
    std::vector<PathAngles> paths(count);
    for (auto& p : paths) {
        p.elevation = uniform(engine, -half_pi, half_pi);
        p.azimuth = uniform(engine, -half_pi, half_pi);
    }
    return paths;
}

}  // namespace

double ScenarioSpec::reference_gain() const
{
    const double r = carrier_wavelength / (4.0 * std::numbers::pi);
    return r * r;
}

double ScenarioSpec::per_antenna_power() const { return total_power / static_cast<double>(n_antennas); }

double ScenarioSpec::path_variance(double distance) const
{
    return reference_gain() * std::pow(distance, -path_loss_exponent) / static_cast<double>(path_count);
}

void ScenarioSpec::validate() const
{
    if (n_antennas < 1) {
        throw ConfigError("n_antennas must be >= 1");
    }
    if (path_count < 1) {
        throw ConfigError("path_count must be >= 1");
    }
    require_positive(distances[0], "distance_user1");
    require_positive(distances[1], "distance_user2");
    require_positive(carrier_wavelength, "carrier_wavelength");
    require_positive(path_loss_exponent, "path_loss_exponent");
    require_positive(noise_power, "noise_power");
    require_positive(sinr_threshold, "sinr_threshold");
    require_positive(total_power, "total_power");
    if (!(region_half_side >= 0.0) || !std::isfinite(region_half_side)) {
        throw ConfigError("region_half_side must be finite and >= 0");
    }
}

ScenarioDraw draw_scenario(const ScenarioSpec& spec, std::uint64_t trial_index)
{
    spec.validate();
    auto engine = make_stream(spec.master_seed, trial_index);
    const auto n = static_cast<Eigen::Index>(spec.path_count);

    auto draw_user = [&](double distance) {
        auto tx = draw_paths(engine, spec.path_count);
        auto rx = draw_paths(engine, spec.path_count);
        const double sd = std::sqrt(spec.path_variance(distance) / 2.0);
        Eigen::MatrixXcd prm = Eigen::MatrixXcd::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const double re = sd * standard_normal(engine);
            const double im = sd * standard_normal(engine);
            prm(i, i) = Complex(re, im);
        }
        return UserChannelModel(std::move(tx), std::move(rx), std::move(prm), spec.carrier_wavelength);
    };

    UserChannelModel user1 = draw_user(spec.distances[0]);
    UserChannelModel user2 = draw_user(spec.distances[1]);
    const std::uint64_t seed = engine();

    return ScenarioDraw{
        {std::move(user1), std::move(user2)},
        AntennaArray::uniform_planar(spec.n_antennas, spec.carrier_wavelength / 2.0),
        LinkBudget::from_powers(spec.per_antenna_power(), spec.noise_power, spec.sinr_threshold),
        {MoveRegion(spec.region_half_side), MoveRegion(spec.region_half_side)},
        trial_index,
        seed,
    };
}

const SchemeResult& TrialRecord::of(Scheme s) const { return results[scheme_index(s)]; }

const SchemeStats& AggregateStats::of(Scheme s) const { return per_scheme[scheme_index(s)]; }

TrialRecord run_trial(const ScenarioDraw& draw, const ScaConfig& cfg)
{
    TrialRecord rec;
    rec.trial_index = draw.trial_index;
    rec.results = {eval_proposed(draw, cfg), eval_conventional_noma(draw), eval_oma(draw), eval_oma_ma(draw, cfg)};
    return rec;
}

std::vector<TrialRecord> run_trials(const ScenarioSpec& spec, std::size_t trials, const ScaConfig& cfg,
                                    unsigned threads)
{
    spec.validate();
    cfg.validate();
    std::vector<TrialRecord> records(trials);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t t = next++; t < trials; t = next++) {
            try {
                records[t] = run_trial(draw_scenario(spec, t), cfg);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return records;
}

AggregateStats aggregate(const std::vector<TrialRecord>& records)
{
    if (records.empty()) {
        throw ConfigError("aggregate: no trial records");
    }
    const auto n = static_cast<double>(records.size());
    AggregateStats stats;
    stats.trial_count = records.size();
    for (std::size_t s = 0; s < kAllSchemes.size(); ++s) {
        double r1 = 0.0;
        double r2 = 0.0;
        std::size_t o1 = 0;
        std::size_t o2 = 0;
        for (const auto& rec : records) {
            const SchemeResult& res = rec.results[s];
            r1 += res.rate_user1;
            r2 += res.rate_user2;
            o1 += res.outage_user1 ? 1 : 0;
            o2 += res.outage_user2 ? 1 : 0;
        }
        SchemeStats& out = stats.per_scheme[s];
        out.scheme = kAllSchemes[s];
        out.mean_rate_user1 = r1 / n;
        out.mean_rate_user2 = r2 / n;
        out.mean_sum_rate = out.mean_rate_user1 + out.mean_rate_user2;
        out.outage_prob_user1 = static_cast<double>(o1) / n;
        out.outage_prob_user2 = static_cast<double>(o2) / n;
        out.trials = records.size();
    }
    return stats;
}

SweepAxis parse_sweep_axis(std::string_view name)
{
    if (name == "region_size") {
        return SweepAxis::region_size;
    }
    if (name == "total_power") {
        return SweepAxis::total_power;
    }
    throw ConfigError("unknown sweep axis '" + std::string(name) + "'");
}

std::string_view to_string(SweepAxis axis)
{
    return axis == SweepAxis::region_size ? "region_size" : "total_power";
}

ScenarioSpec apply_sweep_value(const ScenarioSpec& spec, SweepAxis axis, double value)
{
    ScenarioSpec out = spec;
    if (axis == SweepAxis::region_size) {
        out.region_half_side = 0.5 * value * spec.carrier_wavelength;
    } else {
        out.total_power = dbm_to_watts(value);
    }
    return out;
}

std::vector<SweepPoint> run_sweep(const ScenarioSpec& spec, const SweepSpec& sweep, std::size_t trials,
                                  const ScaConfig& cfg, unsigned threads)
{
    if (sweep.values.empty()) {
        throw ConfigError("sweep needs at least one value");
    }
    if (trials < 1) {
        throw ConfigError("trials must be >= 1");
    }
    std::vector<SweepPoint> points;
    points.reserve(sweep.values.size());
    for (double v : sweep.values) {
        SweepPoint p;
        p.value = v;
        p.records = run_trials(apply_sweep_value(spec, sweep.axis, v), trials, cfg, threads);
        p.stats = aggregate(p.records);
        points.push_back(std::move(p));
    }
    return points;
}

}  // namespace mana
