// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/validation.hpp"

#include "mana/oracle.hpp"
#include "mana/power_allocation.hpp"
#include "mana/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace mana::validation {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Channel instances come from the scenario generator under a stream offset so
// they never coincide with the trials of a sweep using the same seed.
constexpr std::uint64_t kInstanceStreamBase = 0x5eed0000'00000000ULL;

struct Instance {
    UserChannelModel model;
    CouplingMatrix coupling;
    MoveRegion region;
};

Instance make_instance(const ScenarioSpec& spec, std::uint64_t index)
{
    const ScenarioDraw draw = draw_scenario(spec, kInstanceStreamBase + index / 2);
    const std::size_t user = index % 2;
    return {draw.users[user], coupling_matrix(draw.array, draw.users[user]), draw.regions[user]};
}

Position2D random_position(std::mt19937_64& engine, const MoveRegion& region)
{
    const double h = region.half_side();
    return {uniform(engine, -h, h), uniform(engine, -h, h)};
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// Mixed-scale (gain pair, budget) sample spanning every case.
std::pair<GainPair, LinkBudget> random_gain_budget(std::mt19937_64& engine)
{
    const double p0 = std::pow(10.0, uniform(engine, -3.0, 0.0));
    const double noise = std::pow(10.0, uniform(engine, -13.0, -9.0));
    const double threshold = std::pow(10.0, uniform(engine, -1.0, 2.0));
    const LinkBudget lb = LinkBudget::from_powers(p0, noise, threshold);

    const double kind = uniform(engine, 0.0, 1.0);
    double snr_strong = std::pow(10.0, uniform(engine, -1.0, 5.0));
    double snr_weak = snr_strong * std::pow(10.0, uniform(engine, -5.0, 0.0));
    if (kind < 0.01) {
        snr_strong = 0.0;
        snr_weak = 0.0;
    } else if (kind < 0.05) {
        snr_weak = 0.0;
    } else if (kind < 0.08) {
        snr_weak = snr_strong;
    }
    const double gs = snr_strong / lb.snr_ratio;
    const double gw = snr_weak / lb.snr_ratio;
    const bool swap = uniform(engine, 0.0, 1.0) < 0.5;
    return {swap ? GainPair::from_user_gains(gw, gs) : GainPair::from_user_gains(gs, gw), lb};
}

}  // namespace

CheckResult check_expansion_equivalence(const ScenarioSpec& spec, std::size_t instances)
{
    CheckResult res{"expansion_equivalence", true, ""};
    auto engine = make_stream(spec.master_seed, 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < instances; ++i) {
        const ScenarioDraw draw = draw_scenario(spec, kInstanceStreamBase + i);
        const std::size_t user = i % 2;
        const auto& model = draw.users[user];
        const CouplingMatrix m = coupling_matrix(draw.array, model);
        const Position2D r = random_position(engine, draw.regions[user]);
        const double direct = std::norm(channel_gain(r, draw.array, model));
        const double expanded = channel_power_expansion(r, m, model);
        const double rel = std::abs(expanded - direct) / std::max(direct, kEps);
        worst = std::max(worst, rel);
    }
    res.passed = worst < 1e-9;
    res.detail = "max relative error " + fmt(worst) + " over " + std::to_string(instances) + " instances (< 1e-9)";
    return res;
}

CheckResult check_gradient(const ScenarioSpec& spec, std::size_t instances, std::size_t positions)
{
    CheckResult res{"gradient_fd", true, ""};
    auto engine = make_stream(spec.master_seed, 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < instances; ++i) {
        const Instance inst = make_instance(spec, i);
        const auto f = [&](Position2D p) { return objective(p, inst.coupling, inst.model); };
        const double step = 1e-6 * inst.model.wavelength();
        for (std::size_t j = 0; j < positions; ++j) {
            const Position2D r = random_position(engine, inst.region);
            const Gradient2D g = gradient(r, inst.coupling, inst.model);
            const Eigen::Vector2d fd = oracle::fd_gradient(f, r, step);
            const double diff = std::hypot(g.dx - fd.x(), g.dy - fd.y());
            const double scale = std::hypot(g.dx, g.dy);
            worst = std::max(worst, diff / std::max(scale, std::numeric_limits<double>::min()));
        }
    }
    res.passed = worst < 1e-5;
    res.detail = "max relative error " + fmt(worst) + " (< 1e-5)";
    return res;
}

CheckResult check_majorization(const ScenarioSpec& spec, std::size_t pairs)
{
    CheckResult res{"majorization", true, ""};
    auto engine = make_stream(spec.master_seed, 3);
    constexpr std::size_t kPairsPerInstance = 100;
    std::size_t violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t done = 0, i = 0; done < pairs; ++i) {
        const Instance inst = make_instance(spec, i);
        const double delta = lipschitz_delta(inst.coupling, inst.model);
        for (std::size_t j = 0; j < kPairsPerInstance && done < pairs; ++j, ++done) {
            const Position2D anchor = random_position(engine, inst.region);
            const Position2D r = random_position(engine, inst.region);
            const double f = objective(r, inst.coupling, inst.model);
            const double s = surrogate(r, anchor, inst.coupling, inst.model, delta);
            const double slack = s - (f - 1e-9 * std::abs(f));
            if (slack < 0.0) {
                ++violations;
            }
            worst = std::max(worst, (f - s) / std::max(std::abs(f), kEps));
        }
    }
    res.passed = violations == 0;
    res.detail = std::to_string(violations) + " violations in " + std::to_string(pairs) +
                 " pairs; max (F - S)/|F| = " + fmt(worst);
    return res;
}

CheckResult check_hessian_bound(const ScenarioSpec& spec, std::size_t instances, std::size_t positions)
{
    CheckResult res{"hessian_bound", true, ""};
    auto engine = make_stream(spec.master_seed, 4);
    std::size_t violations = 0;
    double worst_ratio = 0.0;
    double worst_asym = 0.0;
    for (std::size_t i = 0; i < instances; ++i) {
        const Instance inst = make_instance(spec, i);
        const double delta = lipschitz_delta(inst.coupling, inst.model);
        const auto f = [&](Position2D p) { return objective(p, inst.coupling, inst.model); };
        const double step = 1e-4 * inst.model.wavelength();
        for (std::size_t j = 0; j < positions; ++j) {
            const Position2D r = random_position(engine, inst.region);
            const oracle::HessianEstimate h = oracle::fd_hessian(f, r, step);
            worst_asym = std::max(worst_asym, h.asymmetry);
            const double radius = oracle::spectral_radius(h.matrix);
            if (h.asymmetry >= 1e-6 || radius > delta * (1.0 + 1e-6)) {
                ++violations;
            }
            if (delta > 0.0) {
                worst_ratio = std::max(worst_ratio, radius / delta);
            }
        }
    }
    res.passed = violations == 0;
    res.detail = std::to_string(violations) + " violations; max |eig|/delta = " + fmt(worst_ratio) +
                 ", max asymmetry " + fmt(worst_asym);
    return res;
}

CheckResult check_sca_descent(const ScenarioSpec& spec, std::size_t runs)
{
    CheckResult res{"sca_descent", true, ""};
    auto engine = make_stream(spec.master_seed, 5);
    constexpr double kDampings[] = {0.5, 0.9, 1.0};
    std::size_t violations = 0;
    std::size_t traces = 0;
    for (std::size_t i = 0; i < runs; ++i) {
        const Instance inst = make_instance(spec, i);
        const Position2D start = i % 2 == 0 ? Position2D{} : random_position(engine, inst.region);
        for (double eta : kDampings) {
            ScaConfig cfg;
            cfg.damping = eta;
            const ScaResult out = optimize_position(start, inst.coupling, inst.model, inst.region, cfg);
            ++traces;
            const auto& v = out.trace.objective_values;
            bool ok = v.size() == out.trace.iterates.size();
            for (std::size_t k = 1; k < v.size(); ++k) {
                ok = ok && v[k] <= v[k - 1] + 1e-12 * std::abs(v[k - 1]);
            }
            for (const auto& p : out.trace.iterates) {
                ok = ok && inst.region.contains(p);
            }
            violations += ok ? 0 : 1;
        }
    }
    res.passed = violations == 0;
    res.detail = std::to_string(violations) + " bad traces out of " + std::to_string(traces);
    return res;
}

CheckResult check_sca_vs_grid(const ScenarioSpec& spec, std::size_t trials, int multistart,
                              std::size_t grid_resolution, double ratio, double required_fraction)
{
    CheckResult res{"sca_vs_grid", true, ""};
    std::size_t hits = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < trials; ++i) {
        const Instance inst = make_instance(spec, i);
        ScaConfig cfg;
        cfg.multistart_count = multistart;
        cfg.multistart_seed = spec.master_seed + i;
        const ScaResult out = optimize_position({}, inst.coupling, inst.model, inst.region, cfg);
        const double sca_power = channel_power_expansion(out.position, inst.coupling, inst.model);
        const oracle::GridMaximum grid =
            oracle::grid_search_position(inst.coupling, inst.model, inst.region, {grid_resolution});
        const double r = grid.power > 0.0 ? sca_power / grid.power : 1.0;
        worst = std::min(worst, r);
        hits += r >= ratio ? 1 : 0;
    }
    const double fraction = static_cast<double>(hits) / static_cast<double>(trials);
    res.passed = fraction >= required_fraction;
    res.detail = std::to_string(hits) + "/" + std::to_string(trials) + " trials within " + fmt(ratio) +
                 " of the " + std::to_string(grid_resolution) + "^2 grid maximum (need " +
                 fmt(required_fraction) + "); worst ratio " + fmt(worst);
    return res;
}

CheckResult check_allocator_case1(std::size_t pairs, std::size_t grid_points, std::uint64_t seed)
{
    CheckResult res{"allocator_case1", true, ""};
    auto engine = make_stream(seed, 6);
    std::size_t bad = 0;
    double worst_metric = 0.0;
    double worst_tight = 0.0;
    for (std::size_t done = 0; done < pairs;) {
        const double threshold = std::pow(10.0, uniform(engine, -1.0, 2.0));
        const LinkBudget lb = LinkBudget::from_powers(std::pow(10.0, uniform(engine, -3.0, 0.0)),
                                                      std::pow(10.0, uniform(engine, -13.0, -9.0)), threshold);
        const double snr_weak = threshold * std::pow(10.0, uniform(engine, 0.0, 4.0));
        const double snr_strong = snr_weak * std::pow(10.0, uniform(engine, 0.0, 3.0));
        const GainPair g = GainPair::from_user_gains(snr_strong / lb.snr_ratio, snr_weak / lb.snr_ratio);
        const AllocationOutcome out = classify_and_allocate(g, lb);
        if (out.case_label != AllocCase::I) {
            continue;
        }
        ++done;
        const auto scan = oracle::grid_search_alpha(g, lb, {grid_points});
        if (!scan) {
            ++bad;
            continue;
        }
        const double m = alloc_metric(out.alpha_s, g, lb);
        const double rel_metric = (scan->metric - m) / scan->metric;
        const double rel_tight = std::abs(out.sinr_weak - threshold) / threshold;
        worst_metric = std::max(worst_metric, rel_metric);
        worst_tight = std::max(worst_tight, rel_tight);
        if (rel_metric > 1e-12 || rel_tight > 1e-9) {
            ++bad;
        }
    }
    res.passed = bad == 0;
    res.detail = std::to_string(bad) + " failures in " + std::to_string(pairs) + " Case-I pairs; max metric gap " +
                 fmt(worst_metric) + ", max |gamma_w - gamma0|/gamma0 " + fmt(worst_tight);
    return res;
}

CheckResult check_metric_derivative(std::size_t points, std::uint64_t seed)
{
    CheckResult res{"metric_derivative", true, ""};
    auto engine = make_stream(seed, 7);
    constexpr double kStep = 1e-7;
    std::size_t bad = 0;
    double worst = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const LinkBudget lb = LinkBudget::from_powers(std::pow(10.0, uniform(engine, -3.0, 0.0)),
                                                      std::pow(10.0, uniform(engine, -13.0, -9.0)),
                                                      std::pow(10.0, uniform(engine, -1.0, 2.0)));
        const double snr_a = std::pow(10.0, uniform(engine, -1.0, 4.0));
        const double snr_b = std::pow(10.0, uniform(engine, -1.0, 4.0));
        const GainPair g = GainPair::from_user_gains(snr_a / lb.snr_ratio, snr_b / lb.snr_ratio);
        const double alpha = uniform(engine, kStep, 1.0 - kStep);
        const double analytic = alloc_metric_derivative(alpha, g, lb);
        const double fd = oracle::fd_metric_slope(alpha, g, lb, kStep);
        const double rel = std::abs(analytic - fd) / std::max(std::abs(analytic), kEps);
        worst = std::max(worst, rel);
        if (rel >= 1e-5 || analytic < 0.0) {
            ++bad;
        }
    }
    res.passed = bad == 0;
    res.detail = std::to_string(bad) + " failures in " + std::to_string(points) + " points; max relative error " +
                 fmt(worst);
    return res;
}

CheckResult check_case_coverage(std::size_t tuples, std::uint64_t seed)
{
    CheckResult res{"case_coverage", true, ""};
    auto engine = make_stream(seed, 8);
    std::size_t counts[5] = {0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < tuples; ++i) {
        const auto [g, lb] = random_gain_budget(engine);
        ++counts[static_cast<int>(classify_and_allocate(g, lb).case_label)];
    }
    res.passed = counts[0] > 0 && counts[1] > 0 && counts[2] > 0 && counts[4] > 0 && counts[3] == 0;
    res.detail = "I=" + std::to_string(counts[0]) + " II=" + std::to_string(counts[1]) +
                 " III=" + std::to_string(counts[2]) + " IV=" + std::to_string(counts[3]) +
                 " V=" + std::to_string(counts[4]);
    return res;
}

std::vector<CheckResult> run_quick_suite(const ScenarioSpec& spec)
{
    return {
        check_expansion_equivalence(spec, 200),
        check_gradient(spec, 20, 10),
        check_majorization(spec, 2000),
        check_hessian_bound(spec, 20, 10),
        check_sca_descent(spec, 50),
        check_sca_vs_grid(spec, 20, 8, 101, 0.9, 0.9),
        check_allocator_case1(200, 10000, spec.master_seed),
        check_metric_derivative(2000, spec.master_seed),
        check_case_coverage(100000, spec.master_seed),
    };
}

void print_report(std::ostream& os, const std::vector<CheckResult>& results)
{
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    }
}

}  // namespace mana::validation
