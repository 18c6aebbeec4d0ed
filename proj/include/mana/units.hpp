// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The mana-sim Authors

#ifndef MANA_UNITS_HPP
#define MANA_UNITS_HPP

#include <cmath>

namespace mana {

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

}  // namespace mana

#endif  // MANA_UNITS_HPP
