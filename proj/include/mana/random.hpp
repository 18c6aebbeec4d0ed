// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors
//
// Portable random streams. std::mt19937_64 and std::seed_seq are fully
// specified by the standard; the std:: distributions are not, so uniform and
// Gaussian variates are derived from raw engine output here.

#ifndef MANA_RANDOM_HPP
#define MANA_RANDOM_HPP

#include <cstdint>
#include <random>

namespace mana {

/// Engine for stream `stream` of `master_seed`; a pure function of both.
[[nodiscard]] std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream);

/// Uniform on [lo, hi) with 53 random bits.
[[nodiscard]] double uniform(std::mt19937_64& engine, double lo, double hi);

/// Standard normal via Box-Muller (no cached second variate).
[[nodiscard]] double standard_normal(std::mt19937_64& engine);

}  // namespace mana

#endif  // MANA_RANDOM_HPP
