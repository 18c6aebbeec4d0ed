// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mana::oracle {

namespace {

void check_grid(GridSpec grid)
{
    if (grid.resolution < 2) {
        throw std::invalid_argument("GridSpec: resolution must be >= 2");
    }
}

double grid_coord(double lo, double hi, std::size_t i, std::size_t n)
{
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

GridMaximum grid_search_position(const CouplingMatrix& m, const UserChannelModel& model,
                                 const MoveRegion& region, GridSpec grid)
{
    check_grid(grid);
    const double h = region.half_side();
    GridMaximum best{{0.0, 0.0}, -1.0};
    for (std::size_t iy = 0; iy < grid.resolution; ++iy) {
        const double y = grid_coord(-h, h, iy, grid.resolution);
        for (std::size_t ix = 0; ix < grid.resolution; ++ix) {
            const Position2D p{grid_coord(-h, h, ix, grid.resolution), y};
            const double power = channel_power_expansion(p, m, model);
            if (power > best.power) {
                best = {p, power};
            }
        }
    }
    return best;
}

std::optional<AlphaScan> grid_search_alpha(const GainPair& g, const LinkBudget& lb, GridSpec grid)
{
    check_grid(grid);
    const double rho = lb.snr_ratio;
    const double g0 = lb.sinr_threshold;
    if (!(g.strong_gain > 0.0) || !(g.weak_gain > 0.0)) {
        return std::nullopt;
    }
    const double s = rho * g.strong_gain;
    const double w = rho * g.weak_gain;
    const double lo = std::max(g0 / s, 0.0);
    const double hi = std::min({(s - g0) / (s * (1.0 + g0)), (w - g0) / (w * (1.0 + g0)), 1.0});
    if (lo > hi) {
        return std::nullopt;
    }
    AlphaScan best{lo, alloc_metric(lo, g, lb)};
    for (std::size_t i = 1; i < grid.resolution; ++i) {
        // The last point is pinned to hi exactly.
        const double a = i + 1 == grid.resolution ? hi : grid_coord(lo, hi, i, grid.resolution);
        const double v = alloc_metric(a, g, lb);
        if (v > best.metric) {
            best = {a, v};
        }
    }
    return best;
}

double fd_metric_slope(double alpha_s, const GainPair& g, const LinkBudget& lb, double step)
{
    if (!(step > 0.0)) {
        throw std::invalid_argument("fd_metric_slope: step must be positive");
    }
    const long double rho = lb.snr_ratio;
    const long double s = g.strong_gain;
    const long double w = g.weak_gain;
    const auto m = [&](long double a) {
        const long double gs = a * rho * s;
        const long double gw = (1.0L - a) * rho * w / (a * rho * w + 1.0L);
        return (1.0L + gs) * (1.0L + gw);
    };
    const long double h = step;
    return static_cast<double>((m(alpha_s + h) - m(alpha_s - h)) / (2.0L * h));
}

Eigen::Vector2d fd_gradient(const ScalarField& f, Position2D r, double step)
{
    if (!(step > 0.0)) {
        throw std::invalid_argument("fd_gradient: step must be > 0");
    }
    const double gx = (f({r.x + step, r.y}) - f({r.x - step, r.y})) / (2.0 * step);
    const double gy = (f({r.x, r.y + step}) - f({r.x, r.y - step})) / (2.0 * step);
    return {gx, gy};
}

HessianEstimate fd_hessian(const ScalarField& f, Position2D r, double step)
{
    if (!(step > 0.0)) {
        throw std::invalid_argument("fd_hessian: step must be > 0");
    }
    const Eigen::Vector2d gxp = fd_gradient(f, {r.x + step, r.y}, step);
    const Eigen::Vector2d gxm = fd_gradient(f, {r.x - step, r.y}, step);
    const Eigen::Vector2d gyp = fd_gradient(f, {r.x, r.y + step}, step);
    const Eigen::Vector2d gym = fd_gradient(f, {r.x, r.y - step}, step);

    Eigen::Matrix2d raw;
    raw.row(0) = ((gxp - gxm) / (2.0 * step)).transpose();
    raw.row(1) = ((gyp - gym) / (2.0 * step)).transpose();

    HessianEstimate est;
    const double norm = raw.norm();
    est.asymmetry = norm > 0.0 ? (raw - raw.transpose()).norm() / norm : 0.0;
    est.matrix = 0.5 * (raw + raw.transpose());
    return est;
}

double spectral_radius(const Eigen::Matrix2d& h)
{
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace mana::oracle
