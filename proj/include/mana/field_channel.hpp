// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// Far-field response channel between a fixed BS array and a single movable
// receive antenna.

#ifndef MANA_FIELD_CHANNEL_HPP
#define MANA_FIELD_CHANNEL_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

namespace mana {

using Complex = std::complex<double>;

/// Elevation/azimuth pair of one propagation path, in radians.
struct PathAngles {
    double elevation = 0.0;
    double azimuth = 0.0;

    /// x-direction coefficient cos(elevation)*sin(azimuth).
    [[nodiscard]] double x_coeff() const;
    /// y-direction coefficient sin(elevation).
    [[nodiscard]] double y_coeff() const;
};

struct Position2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Position2D&, const Position2D&) = default;
};

/// Square movement region [-half_side, half_side]^2 around the local origin.
class MoveRegion {
public:
    MoveRegion() = default;
    explicit MoveRegion(double half_side);

    [[nodiscard]] double half_side() const { return half_side_; }
    [[nodiscard]] bool contains(Position2D p) const;
    /// Coordinate-wise projection onto the region.
    [[nodiscard]] Position2D clamp(Position2D p) const;

private:
    double half_side_ = 0.0;
};

/// Path geometry and path response matrix (PRM) for one user.
class UserChannelModel {
public:
    /// Throws std::invalid_argument if the path lists are empty, the PRM shape
    /// does not match (rx x tx), or the wavelength is not positive.
    UserChannelModel(std::vector<PathAngles> tx_paths, std::vector<PathAngles> rx_paths,
                     Eigen::MatrixXcd prm, double carrier_wavelength);

    [[nodiscard]] const std::vector<PathAngles>& tx_paths() const { return tx_paths_; }
    [[nodiscard]] const std::vector<PathAngles>& rx_paths() const { return rx_paths_; }
    [[nodiscard]] const Eigen::MatrixXcd& prm() const { return prm_; }
    [[nodiscard]] double wavelength() const { return wavelength_; }
    [[nodiscard]] double wavenumber() const;

private:
    std::vector<PathAngles> tx_paths_;
    std::vector<PathAngles> rx_paths_;
    Eigen::MatrixXcd prm_;
    double wavelength_;
};

/// Fixed-position transmit array.
class AntennaArray {
public:
    /// Throws std::invalid_argument if empty or if two elements coincide.
    explicit AntennaArray(std::vector<Position2D> elements);

    /// Uniform planar array with the most-square rows x cols factorization of
    /// `count`, element pitch `spacing`, centred on the origin.
    static AntennaArray uniform_planar(std::size_t count, double spacing);

    [[nodiscard]] const std::vector<Position2D>& elements() const { return elements_; }
    [[nodiscard]] std::size_t size() const { return elements_.size(); }

private:
    std::vector<Position2D> elements_;
};

/// Rank-one Hermitian matrix v*v^H with v = PRM * G * 1.
struct CouplingMatrix {
    Eigen::MatrixXcd entries;
    Eigen::VectorXcd source_vector;
};

[[nodiscard]] double propagation_diff_rx(Position2D r, const PathAngles& path);
/// Transmit-side propagation difference; the negation of the receive form.
[[nodiscard]] double propagation_diff_tx(Position2D t, const PathAngles& path);

/// Receive field response vector, one unit phasor per receive path.
[[nodiscard]] Eigen::VectorXcd receive_frv(Position2D r, const UserChannelModel& model);
/// Transmit field response matrix (tx paths x antennas).
[[nodiscard]] Eigen::MatrixXcd transmit_frm(const AntennaArray& array, const UserChannelModel& model);

/// h(r) = f(r)^T * PRM * G * 1.
[[nodiscard]] Complex channel_gain(Position2D r, const AntennaArray& array,
                                   const UserChannelModel& model);

[[nodiscard]] CouplingMatrix coupling_matrix(const AntennaArray& array, const UserChannelModel& model);

/// |h(r)|^2 written as the diagonal sum plus pairwise cosine terms of the
/// coupling matrix.
[[nodiscard]] double channel_power_expansion(Position2D r, const CouplingMatrix& m,
                                             const UserChannelModel& model);

/// Principal argument in (-pi, pi]; arg(0) = 0.
[[nodiscard]] double principal_arg(Complex z);

}  // namespace mana

#endif  // MANA_FIELD_CHANNEL_HPP
