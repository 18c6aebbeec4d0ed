// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/io.hpp"
#include "mana/oracle.hpp"
#include "mana/scenario.hpp"
#include "mana/units.hpp"
#include "mana/validation.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mana;

namespace {

std::string to_csv(const std::vector<SweepPoint>& points, bool outage_only)
{
    std::ostringstream os;
    if (outage_only) {
        write_outage_csv(os, points);
    } else {
        write_sweep_csv(os, points);
    }
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_mana, m)
{
    m.doc() = "Two-user movable-antenna NOMA downlink simulator";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    m.def("dbm_to_watts", &dbm_to_watts);
    m.def("db_to_linear", &db_to_linear);

    // Channel model.
    py::class_<PathAngles>(m, "PathAngles")
        .def(py::init<>())
        .def(py::init([](double el, double az) { return PathAngles{el, az}; }), py::arg("elevation"),
             py::arg("azimuth"))
        .def_readwrite("elevation", &PathAngles::elevation)
        .def_readwrite("azimuth", &PathAngles::azimuth);

    py::class_<Position2D>(m, "Position2D")
        .def(py::init<>())
        .def(py::init([](double x, double y) { return Position2D{x, y}; }), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Position2D::x)
        .def_readwrite("y", &Position2D::y)
        .def(py::self == py::self)
        .def("__repr__", [](const Position2D& p) {
            return "Position2D(" + format_number(p.x) + ", " + format_number(p.y) + ")";
        });

    py::class_<MoveRegion>(m, "MoveRegion")
        .def(py::init<double>(), py::arg("half_side"))
        .def_property_readonly("half_side", &MoveRegion::half_side)
        .def("contains", &MoveRegion::contains)
        .def("clamp", &MoveRegion::clamp);

    py::class_<UserChannelModel>(m, "UserChannelModel")
        .def(py::init<std::vector<PathAngles>, std::vector<PathAngles>, Eigen::MatrixXcd, double>(),
             py::arg("tx_paths"), py::arg("rx_paths"), py::arg("prm"), py::arg("wavelength"))
        .def_property_readonly("tx_paths", &UserChannelModel::tx_paths)
        .def_property_readonly("rx_paths", &UserChannelModel::rx_paths)
        .def_property_readonly("prm", &UserChannelModel::prm)
        .def_property_readonly("wavelength", &UserChannelModel::wavelength);

    py::class_<AntennaArray>(m, "AntennaArray")
        .def(py::init<std::vector<Position2D>>(), py::arg("elements"))
        .def_static("uniform_planar", &AntennaArray::uniform_planar, py::arg("count"), py::arg("spacing"))
        .def_property_readonly("elements", &AntennaArray::elements)
        .def("__len__", &AntennaArray::size);

    py::class_<CouplingMatrix>(m, "CouplingMatrix")
        .def_readonly("entries", &CouplingMatrix::entries)
        .def_readonly("source_vector", &CouplingMatrix::source_vector);

    m.def("channel_gain", &channel_gain, py::arg("position"), py::arg("array"), py::arg("model"));
    m.def("coupling_matrix", &coupling_matrix, py::arg("array"), py::arg("model"));
    m.def("channel_power_expansion", &channel_power_expansion, py::arg("position"), py::arg("coupling"),
          py::arg("model"));

    // Power allocation.
    py::class_<LinkBudget>(m, "LinkBudget")
        .def_static("from_powers", &LinkBudget::from_powers, py::arg("per_antenna_power"), py::arg("noise_power"),
                    py::arg("sinr_threshold"))
        .def_readonly("per_antenna_power", &LinkBudget::per_antenna_power)
        .def_readonly("noise_power", &LinkBudget::noise_power)
        .def_readonly("snr_ratio", &LinkBudget::snr_ratio)
        .def_readonly("sinr_threshold", &LinkBudget::sinr_threshold);

    py::class_<GainPair>(m, "GainPair")
        .def_static("from_user_gains", &GainPair::from_user_gains, py::arg("gain_user1"), py::arg("gain_user2"))
        .def_readonly("strong_gain", &GainPair::strong_gain)
        .def_readonly("weak_gain", &GainPair::weak_gain)
        .def_readonly("strong_user", &GainPair::strong_user);

    py::class_<AllocBounds>(m, "AllocBounds")
        .def_readonly("lower", &AllocBounds::lower)
        .def_readonly("upper_strong", &AllocBounds::upper_strong)
        .def_readonly("upper_weak", &AllocBounds::upper_weak);

    py::class_<AllocationOutcome>(m, "AllocationOutcome")
        .def_property_readonly("case_label",
                               [](const AllocationOutcome& o) { return std::string(to_string(o.case_label)); })
        .def_readonly("alpha_s", &AllocationOutcome::alpha_s)
        .def_readonly("sinr_strong", &AllocationOutcome::sinr_strong)
        .def_readonly("sinr_weak", &AllocationOutcome::sinr_weak)
        .def_readonly("rate_strong", &AllocationOutcome::rate_strong)
        .def_readonly("rate_weak", &AllocationOutcome::rate_weak)
        .def_readonly("outage_strong", &AllocationOutcome::outage_strong)
        .def_readonly("outage_weak", &AllocationOutcome::outage_weak)
        .def_property_readonly("sum_rate", &AllocationOutcome::sum_rate);

    m.def("alloc_bounds", &alloc_bounds, py::arg("gains"), py::arg("link"));
    m.def("classify_and_allocate", &classify_and_allocate, py::arg("gains"), py::arg("link"));
    m.def("alloc_metric", &alloc_metric, py::arg("alpha_s"), py::arg("gains"), py::arg("link"));

    // Position optimization.
    py::class_<ScaConfig>(m, "ScaConfig")
        .def(py::init<>())
        .def_readwrite("damping", &ScaConfig::damping)
        .def_readwrite("tolerance", &ScaConfig::tolerance)
        .def_readwrite("max_iterations", &ScaConfig::max_iterations)
        .def_readwrite("multistart_count", &ScaConfig::multistart_count)
        .def_readwrite("delta_floor", &ScaConfig::delta_floor)
        .def_readwrite("multistart_seed", &ScaConfig::multistart_seed);

    py::class_<ScaResult>(m, "ScaResult")
        .def_readonly("position", &ScaResult::position)
        .def_property_readonly("iterates", [](const ScaResult& r) { return r.trace.iterates; })
        .def_property_readonly("objective_values", [](const ScaResult& r) { return r.trace.objective_values; })
        .def_property_readonly("converged",
                               [](const ScaResult& r) { return r.trace.termination == ScaTermination::converged; });

    m.def("objective", &objective, py::arg("position"), py::arg("coupling"), py::arg("model"));
    m.def(
        "gradient",
        [](Position2D r, const CouplingMatrix& c, const UserChannelModel& model) {
            const Gradient2D g = gradient(r, c, model);
            return py::make_tuple(g.dx, g.dy);
        },
        py::arg("position"), py::arg("coupling"), py::arg("model"));
    m.def("lipschitz_delta", &lipschitz_delta, py::arg("coupling"), py::arg("model"));
    m.def("optimize_position", &optimize_position, py::arg("start"), py::arg("coupling"), py::arg("model"),
          py::arg("region"), py::arg("config") = ScaConfig{});
    m.def(
        "grid_search_position",
        [](const CouplingMatrix& c, const UserChannelModel& model, const MoveRegion& region, std::size_t res) {
            const auto best = oracle::grid_search_position(c, model, region, {res});
            return py::make_tuple(best.position, best.power);
        },
        py::arg("coupling"), py::arg("model"), py::arg("region"), py::arg("resolution") = 201);

    // Scenarios and Monte Carlo.
    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def(py::init<>())
        .def_readwrite("n_antennas", &ScenarioSpec::n_antennas)
        .def_readwrite("distances", &ScenarioSpec::distances)
        .def_readwrite("carrier_wavelength", &ScenarioSpec::carrier_wavelength)
        .def_readwrite("path_count", &ScenarioSpec::path_count)
        .def_readwrite("path_loss_exponent", &ScenarioSpec::path_loss_exponent)
        .def_readwrite("noise_power", &ScenarioSpec::noise_power)
        .def_readwrite("sinr_threshold", &ScenarioSpec::sinr_threshold)
        .def_readwrite("region_half_side", &ScenarioSpec::region_half_side)
        .def_readwrite("total_power", &ScenarioSpec::total_power)
        .def_readwrite("master_seed", &ScenarioSpec::master_seed);

    py::class_<ScenarioDraw>(m, "ScenarioDraw")
        .def_readonly("users", &ScenarioDraw::users)
        .def_readonly("array", &ScenarioDraw::array)
        .def_readonly("link", &ScenarioDraw::link)
        .def_readonly("regions", &ScenarioDraw::regions)
        .def_readonly("trial_index", &ScenarioDraw::trial_index)
        .def_readonly("seed", &ScenarioDraw::seed);

    py::class_<SchemeResult>(m, "SchemeResult")
        .def_property_readonly("scheme", [](const SchemeResult& r) { return std::string(to_string(r.scheme)); })
        .def_readonly("rate_user1", &SchemeResult::rate_user1)
        .def_readonly("rate_user2", &SchemeResult::rate_user2)
        .def_readonly("sum_rate", &SchemeResult::sum_rate)
        .def_readonly("outage_user1", &SchemeResult::outage_user1)
        .def_readonly("outage_user2", &SchemeResult::outage_user2)
        .def_readonly("alpha_s", &SchemeResult::alpha_s)
        .def_readonly("positions", &SchemeResult::positions)
        .def_readonly("gains", &SchemeResult::gains)
        .def_property_readonly("case_label", [](const SchemeResult& r) -> std::optional<std::string> {
            if (!r.case_label) {
                return std::nullopt;
            }
            return std::string(to_string(*r.case_label));
        });

    py::class_<TrialRecord>(m, "TrialRecord")
        .def_readonly("trial_index", &TrialRecord::trial_index)
        .def_readonly("results", &TrialRecord::results);

    m.def("draw_scenario", &draw_scenario, py::arg("spec"), py::arg("trial_index"));
    m.def("run_trial", &run_trial, py::arg("draw"), py::arg("config") = ScaConfig{});
    m.def("run_trials", &run_trials, py::arg("spec"), py::arg("trials"), py::arg("config") = ScaConfig{},
          py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());
    m.def(
        "sweep_csv",
        [](const ScenarioSpec& spec, const std::string& axis, const std::vector<double>& values,
           std::size_t trials, const ScaConfig& cfg, unsigned threads, bool outage_only) {
            const SweepSpec sweep{parse_sweep_axis(axis), values};
            std::vector<SweepPoint> points;
            {
                py::gil_scoped_release release;
                points = run_sweep(spec, sweep, trials, cfg, threads);
            }
            return to_csv(points, outage_only);
        },
        py::arg("spec"), py::arg("axis"), py::arg("values"), py::arg("trials"), py::arg("config") = ScaConfig{},
        py::arg("threads") = 0, py::arg("outage_only") = false);

    // Configuration.
    m.def(
        "parse_config",
        [](const std::string& text) {
            const RunConfig cfg = parse_config(text);
            return py::make_tuple(cfg.scenario_spec(), cfg.sca_config(), cfg.trials);
        },
        py::arg("text"), "Returns (ScenarioSpec, ScaConfig, trials).");
    m.def(
        "canonical_config", [](const std::string& text) { return serialize_config(parse_config(text)); },
        py::arg("text"));

    m.def(
        "validate",
        [](const ScenarioSpec& spec) {
            std::vector<py::tuple> out;
            for (const auto& r : validation::run_quick_suite(spec)) {
                out.push_back(py::make_tuple(r.name, r.passed, r.detail));
            }
            return out;
        },
        py::arg("spec") = ScenarioSpec{});
}
