// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// Brute-force and finite-difference reference computations. Nothing here
// calls into the position optimizer or the case classifier, so these can be
// used to check them.

#ifndef MANA_ORACLE_HPP
#define MANA_ORACLE_HPP

#include "mana/field_channel.hpp"
#include "mana/power_allocation.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <optional>

namespace mana::oracle {

struct GridSpec {
    std::size_t resolution = 201;  // points per axis, >= 2
};

struct GridMaximum {
    Position2D position;
    double power = 0.0;
};

/// Exhaustive argmax of |h|^2 on a resolution x resolution grid over the
/// region; ties resolve to the lowest linear index (row-major in y, then x).
[[nodiscard]] GridMaximum grid_search_position(const CouplingMatrix& m, const UserChannelModel& model,
                                               const MoveRegion& region, GridSpec grid);

struct AlphaScan {
    double alpha = 0.0;
    double metric = 0.0;
};

/// Scans alloc_metric over [l1, min(mu1, mu2)] clipped to [0, 1]. Returns
/// nullopt when that interval is empty.
[[nodiscard]] std::optional<AlphaScan> grid_search_alpha(const GainPair& g, const LinkBudget& lb,
                                                         GridSpec grid);

/// Central-difference slope of (1 + gamma_s)(1 + gamma_w) in alpha, evaluated
/// in extended precision from the SINR expressions directly.
[[nodiscard]] double fd_metric_slope(double alpha_s, const GainPair& g, const LinkBudget& lb, double step);

using ScalarField = std::function<double(Position2D)>;

/// Central-difference gradient.
[[nodiscard]] Eigen::Vector2d fd_gradient(const ScalarField& f, Position2D r, double step);

struct HessianEstimate {
    Eigen::Matrix2d matrix;   // symmetrized
    double asymmetry = 0.0;   // ||H - H^T||_F / ||H||_F before symmetrizing
};

/// Central differences of the central-difference gradient.
[[nodiscard]] HessianEstimate fd_hessian(const ScalarField& f, Position2D r, double step);

/// Largest absolute eigenvalue of a symmetric 2x2 matrix.
[[nodiscard]] double spectral_radius(const Eigen::Matrix2d& h);

}  // namespace mana::oracle

#endif  // MANA_ORACLE_HPP
