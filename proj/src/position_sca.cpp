// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/position_sca.hpp"

#include "mana/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mana {

void ScaConfig::validate() const
{
    if (!(damping > 0.0 && damping <= 1.0)) {
        throw std::invalid_argument("ScaConfig: damping must lie in (0, 1]");
    }
    if (!(tolerance > 0.0)) {
        throw std::invalid_argument("ScaConfig: tolerance must be > 0");
    }
    if (max_iterations < 1) {
        throw std::invalid_argument("ScaConfig: max_iterations must be >= 1");
    }
    if (multistart_count < 1) {
        throw std::invalid_argument("ScaConfig: multistart_count must be >= 1");
    }
    if (!(delta_floor >= 0.0)) {
        throw std::invalid_argument("ScaConfig: delta_floor must be >= 0");
    }
}

std::string_view to_string(ScaTermination t)
{
    switch (t) {
    case ScaTermination::converged: return "converged";
    case ScaTermination::max_iterations: return "max_iterations";
    case ScaTermination::stationary: return "stationary";
    }
    return "?";
}

namespace {

// One k < l cross term of the cosine expansion.
struct PairTerm {
    std::size_t k;
    std::size_t l;
    double magnitude;
    double angle;
    double da;  // a_k - a_l
    double db;  // b_k - b_l
};

std::vector<PairTerm> pair_terms(const CouplingMatrix& m, const UserChannelModel& model)
{
    const auto& paths = model.rx_paths();
    std::vector<PairTerm> terms;
    terms.reserve(paths.size() * (paths.size() - 1) / 2);
    for (std::size_t k = 0; k < paths.size(); ++k) {
        for (std::size_t l = k + 1; l < paths.size(); ++l) {
            const Complex mkl = m.entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l));
            const double mag = std::abs(mkl);
            if (mag == 0.0) {
                continue;
            }
            terms.push_back({k, l, mag, principal_arg(mkl), paths[k].x_coeff() - paths[l].x_coeff(),
                             paths[k].y_coeff() - paths[l].y_coeff()});
        }
    }
    return terms;
}

Gradient2D gradient_from_terms(Position2D r, const std::vector<PairTerm>& terms, double wavenumber)
{
    Gradient2D g;
    for (const auto& t : terms) {
        const double phase = wavenumber * (r.x * t.da + r.y * t.db) - t.angle;
        const double w = 2.0 * wavenumber * t.magnitude * std::sin(phase);
        g.dx += w * t.da;
        g.dy += w * t.db;
    }
    return g;
}

struct SingleRun {
    ScaResult result;
    double final_objective;
};

SingleRun run_from(Position2D start, const CouplingMatrix& m, const UserChannelModel& model,
                   const MoveRegion& region, const ScaConfig& cfg, const std::vector<PairTerm>& terms,
                   double delta)
{
    const double k = model.wavenumber();
    ScaTrace trace;
    Position2D prev = start;
    trace.iterates.push_back(prev);
    trace.objective_values.push_back(objective(prev, m, model));

    for (int n = 1;; ++n) {
        const Gradient2D g = gradient_from_terms(prev, terms, k);
        if (delta <= cfg.delta_floor || (g.dx == 0.0 && g.dy == 0.0)) {
            trace.iterates.push_back(prev);
            trace.objective_values.push_back(trace.objective_values.back());
            trace.termination = ScaTermination::stationary;
            break;
        }
        const Position2D target = region.clamp({prev.x - g.dx / delta, prev.y - g.dy / delta});
        const double eta = cfg.damping;
        // The clamp only absorbs rounding: a convex combination of in-region points.
        const Position2D next = region.clamp(
            {eta * target.x + (1.0 - eta) * prev.x, eta * target.y + (1.0 - eta) * prev.y});
        trace.iterates.push_back(next);
        trace.objective_values.push_back(objective(next, m, model));

        const double step = std::hypot(next.x - prev.x, next.y - prev.y);
        prev = next;
        if (step <= cfg.tolerance) {
            trace.termination = ScaTermination::converged;
            break;
        }
        if (n >= cfg.max_iterations) {
            trace.termination = ScaTermination::max_iterations;
            break;
        }
    }
    const double final_value = trace.objective_values.back();
    return {{prev, std::move(trace)}, final_value};
}

}  // namespace

double objective(Position2D r, const CouplingMatrix& m, const UserChannelModel& model)
{
    return -channel_power_expansion(r, m, model);
}

Gradient2D gradient(Position2D r, const CouplingMatrix& m, const UserChannelModel& model)
{
    return gradient_from_terms(r, pair_terms(m, model), model.wavenumber());
}

double lipschitz_delta(const CouplingMatrix& m, const UserChannelModel& model)
{
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    for (const auto& t : pair_terms(m, model)) {
        a += t.magnitude * t.da * t.da;
        b += t.magnitude * t.db * t.db;
        c += t.magnitude * std::abs(t.da) * std::abs(t.db);
    }
    const double scale = 2.0 * model.wavenumber() * model.wavenumber();  // 8 pi^2 / lambda^2
    a *= scale;
    b *= scale;
    c *= scale;
    return std::sqrt(a * a + b * b + 2.0 * c * c);
}

double surrogate(Position2D r, Position2D anchor, const CouplingMatrix& m, const UserChannelModel& model,
                 double delta)
{
    const Gradient2D g = gradient(anchor, m, model);
    const double dx = r.x - anchor.x;
    const double dy = r.y - anchor.y;
    return objective(anchor, m, model) + g.dx * dx + g.dy * dy + 0.5 * delta * (dx * dx + dy * dy);
}

Position2D surrogate_step(Position2D anchor, const CouplingMatrix& m, const UserChannelModel& model,
                          double delta, const MoveRegion& region, double delta_floor)
{
    if (delta <= delta_floor) {
        return anchor;
    }
    const Gradient2D g = gradient(anchor, m, model);
    if (g.dx == 0.0 && g.dy == 0.0) {
        return anchor;
    }
    return region.clamp({anchor.x - g.dx / delta, anchor.y - g.dy / delta});
}

ScaResult optimize_position(Position2D start, const CouplingMatrix& m, const UserChannelModel& model,
                            const MoveRegion& region, const ScaConfig& cfg)
{
    cfg.validate();
    if (!region.contains(start)) {
        throw std::invalid_argument("optimize_position: start lies outside the move region");
    }
    const auto terms = pair_terms(m, model);
    const double delta = lipschitz_delta(m, model);

    SingleRun best = run_from(start, m, model, region, cfg, terms, delta);
    if (cfg.multistart_count > 1) {
        auto engine = make_stream(cfg.multistart_seed, 0);
        const double h = region.half_side();
        for (int s = 1; s < cfg.multistart_count; ++s) {
            const double x = uniform(engine, -h, h);
            const double y = uniform(engine, -h, h);
            SingleRun run = run_from({x, y}, m, model, region, cfg, terms, delta);
            // Strict improvement only: ties keep the earlier start.
            if (run.final_objective < best.final_objective) {
                best = std::move(run);
            }
        }
    }
    return std::move(best.result);
}

}  // namespace mana
