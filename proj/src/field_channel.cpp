// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/field_channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mana {

double PathAngles::x_coeff() const { return std::cos(elevation) * std::sin(azimuth); }

double PathAngles::y_coeff() const { return std::sin(elevation); }

MoveRegion::MoveRegion(double half_side) : half_side_(half_side)
{
    if (!(half_side >= 0.0) || !std::isfinite(half_side)) {
        throw std::invalid_argument("MoveRegion: half_side must be finite and >= 0");
    }
}

bool MoveRegion::contains(Position2D p) const
{
    return std::abs(p.x) <= half_side_ && std::abs(p.y) <= half_side_;
}

Position2D MoveRegion::clamp(Position2D p) const
{
    return {std::clamp(p.x, -half_side_, half_side_), std::clamp(p.y, -half_side_, half_side_)};
}

UserChannelModel::UserChannelModel(std::vector<PathAngles> tx_paths, std::vector<PathAngles> rx_paths,
                                   Eigen::MatrixXcd prm, double carrier_wavelength)
    : tx_paths_(std::move(tx_paths)),
      rx_paths_(std::move(rx_paths)),
      prm_(std::move(prm)),
      wavelength_(carrier_wavelength)
{
    if (tx_paths_.empty() || rx_paths_.empty()) {
        throw std::invalid_argument("UserChannelModel: at least one tx and one rx path required");
    }
    if (prm_.rows() != static_cast<Eigen::Index>(rx_paths_.size()) ||
        prm_.cols() != static_cast<Eigen::Index>(tx_paths_.size())) {
        throw std::invalid_argument("UserChannelModel: PRM must be " + std::to_string(rx_paths_.size()) +
                                    "x" + std::to_string(tx_paths_.size()));
    }
    if (!(wavelength_ > 0.0) || !std::isfinite(wavelength_)) {
        throw std::invalid_argument("UserChannelModel: carrier wavelength must be positive");
    }
}

double UserChannelModel::wavenumber() const { return 2.0 * std::numbers::pi / wavelength_; }

AntennaArray::AntennaArray(std::vector<Position2D> elements) : elements_(std::move(elements))
{
    if (elements_.empty()) {
        throw std::invalid_argument("AntennaArray: at least one element required");
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (std::size_t j = i + 1; j < elements_.size(); ++j) {
            if (elements_[i] == elements_[j]) {
                throw std::invalid_argument("AntennaArray: duplicate element position");
            }
        }
    }
}

AntennaArray AntennaArray::uniform_planar(std::size_t count, double spacing)
{
    if (count == 0) {
        throw std::invalid_argument("AntennaArray: at least one element required");
    }
    if (!(spacing > 0.0)) {
        throw std::invalid_argument("AntennaArray: spacing must be positive");
    }
    std::size_t rows = 1;
    for (std::size_t f = 1; f * f <= count; ++f) {
        if (count % f == 0) {
            rows = f;
        }
    }
    const std::size_t cols = count / rows;
    std::vector<Position2D> elements;
    elements.reserve(count);
    const double x0 = 0.5 * static_cast<double>(cols - 1);
    const double y0 = 0.5 * static_cast<double>(rows - 1);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            elements.push_back({(static_cast<double>(c) - x0) * spacing, (static_cast<double>(r) - y0) * spacing});
        }
    }
    return AntennaArray(std::move(elements));
}

double propagation_diff_rx(Position2D r, const PathAngles& path)
{
    return r.x * path.x_coeff() + r.y * path.y_coeff();
}

double propagation_diff_tx(Position2D t, const PathAngles& path) { return -propagation_diff_rx(t, path); }

namespace {

Complex phasor(double wavenumber, double diff) { return std::polar(1.0, -wavenumber * diff); }

}  // namespace

Eigen::VectorXcd receive_frv(Position2D r, const UserChannelModel& model)
{
    const auto& paths = model.rx_paths();
    const double k = model.wavenumber();
    Eigen::VectorXcd f(static_cast<Eigen::Index>(paths.size()));
    for (std::size_t n = 0; n < paths.size(); ++n) {
        f(static_cast<Eigen::Index>(n)) = phasor(k, propagation_diff_rx(r, paths[n]));
    }
    return f;
}

Eigen::MatrixXcd transmit_frm(const AntennaArray& array, const UserChannelModel& model)
{
    const auto& paths = model.tx_paths();
    const auto& elems = array.elements();
    const double k = model.wavenumber();
    Eigen::MatrixXcd g(static_cast<Eigen::Index>(paths.size()), static_cast<Eigen::Index>(elems.size()));
    for (std::size_t col = 0; col < elems.size(); ++col) {
        for (std::size_t m = 0; m < paths.size(); ++m) {
            g(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(col)) =
                phasor(k, propagation_diff_tx(elems[col], paths[m]));
        }
    }
    return g;
}

namespace {

Eigen::VectorXcd source_vector(const AntennaArray& array, const UserChannelModel& model)
{
    // G * 1 is the row sum of the transmit FRM.
    const Eigen::VectorXcd g_sum = transmit_frm(array, model).rowwise().sum();
    return model.prm() * g_sum;
}

}  // namespace

Complex channel_gain(Position2D r, const AntennaArray& array, const UserChannelModel& model)
{
    return receive_frv(r, model).transpose() * source_vector(array, model);
}

CouplingMatrix coupling_matrix(const AntennaArray& array, const UserChannelModel& model)
{
    CouplingMatrix m;
    m.source_vector = source_vector(array, model);
    m.entries = m.source_vector * m.source_vector.adjoint();
    return m;
}

double principal_arg(Complex z)
{
    if (z == Complex{0.0, 0.0}) {
        return 0.0;
    }
    const double a = std::arg(z);
    return a == -std::numbers::pi ? std::numbers::pi : a;
}

double channel_power_expansion(Position2D r, const CouplingMatrix& m, const UserChannelModel& model)
{
    const auto& paths = model.rx_paths();
    const auto n = static_cast<Eigen::Index>(paths.size());
    const double k = model.wavenumber();

    std::vector<double> rho(paths.size());
    for (std::size_t i = 0; i < paths.size(); ++i) {
        rho[i] = propagation_diff_rx(r, paths[i]);
    }

    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        total += m.entries(i, i).real();
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Complex mij = m.entries(i, j);
            const double mag = std::abs(mij);
            if (mag == 0.0) {
                continue;
            }
            total += 2.0 * mag *
                     std::cos(k * (rho[static_cast<std::size_t>(i)] - rho[static_cast<std::size_t>(j)]) -
                              principal_arg(mij));
        }
    }
    // Cancellation can leave a tiny negative residue when |h|^2 ~ 0.
    return std::max(total, 0.0);
}

}  // namespace mana
