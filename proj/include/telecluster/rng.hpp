// Copyright 2026 The telecluster developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Seeded random states and schedules. The distributions are implemented
 * directly on top of the (portable) mt19937_64 bit stream rather than
 * through std::*_distribution, so that a given seed produces identical
 * output on every platform and standard library.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "telecluster/qcore.hpp"

namespace telecluster {

/// Uniform double in [0, 1), 53 bits of precision.
inline double uniform_unit(std::mt19937_64 &gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(std::mt19937_64 &gen, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(gen);
}

/// Standard normal deviate via Box-Muller on the raw bit stream.
inline double gaussian(std::mt19937_64 &gen) {
    const double u1 = (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform_unit(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Haar-like random pure state: i.i.d. complex Gaussian amplitudes, normalized.
inline StateVector random_state(int num_qubits, std::mt19937_64 &gen) {
    detail::check_qubit_count(num_qubits);
    std::vector<cplx> amps(detail::pow2(num_qubits));
    for (cplx &a : amps) a = cplx{gaussian(gen), gaussian(gen)};
    return normalized(StateVector(num_qubits, std::move(amps)));
}

} // namespace telecluster
