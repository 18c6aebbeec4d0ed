// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#include "mana/random.hpp"

#include <cmath>
#include <numbers>

namespace mana {

std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& engine, double lo, double hi)
{
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

double standard_normal(std::mt19937_64& engine)
{
    const double u1 = 1.0 - uniform(engine, 0.0, 1.0);  // (0, 1]
    const double u2 = uniform(engine, 0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace mana
