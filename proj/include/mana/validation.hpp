// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// Numerical self-checks of the channel model, optimizer and allocator against
// the oracles. Each check is sized by its arguments so the same code serves
// the quick `validate` command and the full acceptance run.

#ifndef MANA_VALIDATION_HPP
#define MANA_VALIDATION_HPP

#include "mana/position_sca.hpp"
#include "mana/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mana::validation {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// |expansion - |h|^2| / max(|h|^2, eps) < 1e-9 over random (channel, position).
CheckResult check_expansion_equivalence(const ScenarioSpec& spec, std::size_t instances);

/// Analytic gradient vs central differences (step 1e-6 lambda), relative < 1e-5.
CheckResult check_gradient(const ScenarioSpec& spec, std::size_t instances, std::size_t positions);

/// surrogate(r; anchor) >= F(r) - 1e-9 |F(r)| for random anchor/r pairs.
CheckResult check_majorization(const ScenarioSpec& spec, std::size_t pairs);

/// Spectral radius of the FD Hessian (step 1e-4 lambda) <= delta (1 + 1e-6).
CheckResult check_hessian_bound(const ScenarioSpec& spec, std::size_t instances, std::size_t positions);

/// Every trace nonincreasing within 1e-12 |F| and inside the region, for each
/// damping in {0.5, 0.9, 1.0}.
CheckResult check_sca_descent(const ScenarioSpec& spec, std::size_t runs);

/// SCA with `multistart` starts reaches >= ratio x grid maximum on at least
/// `required_fraction` of the trials.
CheckResult check_sca_vs_grid(const ScenarioSpec& spec, std::size_t trials, int multistart,
                              std::size_t grid_resolution, double ratio, double required_fraction);

/// Case-I allocation matches the grid-scan maximum of the metric within 1e-12
/// relative and makes the weak user's SINR tight at the threshold.
CheckResult check_allocator_case1(std::size_t pairs, std::size_t grid_points, std::uint64_t seed);

/// Analytic metric derivative vs central differences (step 1e-7), relative
/// < 1e-5, and nonnegative.
CheckResult check_metric_derivative(std::size_t points, std::uint64_t seed);

/// Random (gain, budget) scan hits cases I, II, III and V and never IV.
CheckResult check_case_coverage(std::size_t tuples, std::uint64_t seed);

/// Quick-sized suite used by the `validate` command.
std::vector<CheckResult> run_quick_suite(const ScenarioSpec& spec);

void print_report(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace mana::validation

#endif  // MANA_VALIDATION_HPP
