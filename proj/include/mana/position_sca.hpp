// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// Antenna-position optimizer. Minimizes F(r) = -|h(r)|^2 over a square move
// region by successive convex approximation: at each anchor F is majorized by
// the isotropic quadratic
//
//     S(r; a) = F(a) + grad F(a)^T (r - a) + (delta / 2) ||r - a||^2,
//
// where delta bounds the Frobenius norm of the Hessian of F everywhere, so
// S >= F. The box-constrained minimizer of S is the coordinate-wise clamp of
// a - grad F(a) / delta. The next iterate is the damped step
// eta * r_hat + (1 - eta) * a. Since S(.; a) is convex and S(a; a) = F(a),
// F(next) <= S(next; a) <= eta * S(r_hat; a) + (1 - eta) * F(a) <= F(a) for
// any eta in (0, 1], so the objective never increases.

#ifndef MANA_POSITION_SCA_HPP
#define MANA_POSITION_SCA_HPP

#include "mana/field_channel.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace mana {

struct ScaConfig {
    double damping = 0.9;        // eta in (0, 1]
    double tolerance = 1e-6;     // m
    int max_iterations = 200;
    int multistart_count = 1;
    double delta_floor = 1e-18;
    std::uint64_t multistart_seed = 0;

    /// Throws std::invalid_argument on out-of-range fields.
    void validate() const;
};

enum class ScaTermination { converged, max_iterations, stationary };

[[nodiscard]] std::string_view to_string(ScaTermination t);

struct ScaTrace {
    std::vector<Position2D> iterates;
    std::vector<double> objective_values;
    ScaTermination termination = ScaTermination::max_iterations;
};

struct ScaResult {
    Position2D position;
    ScaTrace trace;
};

struct Gradient2D {
    double dx = 0.0;
    double dy = 0.0;
};

/// F(r) = -|h(r)|^2 via the cosine expansion.
[[nodiscard]] double objective(Position2D r, const CouplingMatrix& m, const UserChannelModel& model);

[[nodiscard]] Gradient2D gradient(Position2D r, const CouplingMatrix& m, const UserChannelModel& model);

/// Position-independent curvature bound sqrt(A^2 + B^2 + 2 C^2).
[[nodiscard]] double lipschitz_delta(const CouplingMatrix& m, const UserChannelModel& model);

[[nodiscard]] double surrogate(Position2D r, Position2D anchor, const CouplingMatrix& m,
                               const UserChannelModel& model, double delta);

/// Exact minimizer of the surrogate over the region. Returns the anchor when
/// delta <= delta_floor.
[[nodiscard]] Position2D surrogate_step(Position2D anchor, const CouplingMatrix& m,
                                        const UserChannelModel& model, double delta,
                                        const MoveRegion& region, double delta_floor = 1e-18);

/// Runs the damped SCA iteration from `start` (and from multistart_count - 1
/// extra seeded starts) and returns the run with the lowest final objective.
/// Throws std::invalid_argument if `start` lies outside the region.
[[nodiscard]] ScaResult optimize_position(Position2D start, const CouplingMatrix& m,
                                          const UserChannelModel& model, const MoveRegion& region,
                                          const ScaConfig& cfg);

}  // namespace mana

#endif  // MANA_POSITION_SCA_HPP
