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
 * The 2n-qubit entangled resource built from a basis pair,
 *
 *   |xi> = 2^(-n/2) sum_K  a_K (x) b_K     (qubit order A1..An B1..Bn),
 *
 * plus reference states (six-qubit cluster, Bell-pair products) and the
 * closed form for the distinguished 4x4 block of the reduced state on the
 * last qubit pair.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "telecluster/bases.hpp"
#include "telecluster/qcore.hpp"

namespace telecluster {

/**
 * @brief Resource state for n-qubit teleportation over qubits A1..An B1..Bn,
 * together with the basis pair that generated it.
 *
 * For any orthonormal pair the state is maximally entangled across the A:B
 * cut (its A-half marginal is I/2^n).
 */
struct ResourceState {
    int n = 0;
    StateVector state;
    OrthonormalBasis basis_a;
    OrthonormalBasis basis_b;
};

inline ResourceState build_resource(OrthonormalBasis basis_a, OrthonormalBasis basis_b) {
    if (basis_a.n != basis_b.n) {
        throw std::invalid_argument("basis pair qubit counts differ");
    }
    const int n = basis_a.n;
    const std::size_t terms = detail::pow2(n);
    const std::size_t dim = terms * terms;
    std::vector<cplx> amps(dim, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < terms; ++k) {
        const StateVector &a = basis_a.vectors[k];
        const StateVector &b = basis_b.vectors[k];
        for (std::size_t i = 0; i < terms; ++i) {
            const cplx ai = a.amps[i];
            if (ai == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < terms; ++j) {
                amps[i * terms + j] += ai * b.amps[j];
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(terms));
    for (cplx &a : amps) a *= scale;
    ResourceState r;
    r.n = n;
    r.state = StateVector(2 * n, std::move(amps));
    r.basis_a = std::move(basis_a);
    r.basis_b = std::move(basis_b);
    return r;
}

/**
 * @brief The six-qubit cluster state reached by the constrained schedule,
 * qubit order A1 A2 A3 B1 B2 B3: eight nonzero amplitudes of magnitude
 * 1/(2 sqrt 2), one negative.
 */
inline StateVector cluster6_reference() {
    std::vector<cplx> amps(64, cplx{0.0, 0.0});
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    amps[0b000000] = a;
    amps[0b001001] = a;
    amps[0b010011] = a;
    amps[0b011010] = a;
    amps[0b100100] = a;
    amps[0b101101] = a;
    amps[0b110111] = a;
    amps[0b111110] = -a;
    return StateVector(6, std::move(amps));
}

/**
 * @brief Constrained n=3 schedule pair whose resource is the six-qubit
 * cluster state for every (t1, t2, t3): last-level angles (t1, t2, t3, 0)
 * on the A side and (t1, pi/2 - t2, t3, pi/2) on the B side, zero prefix
 * levels. The angle dependence cancels pairwise.
 */
inline std::pair<AngleSchedule, AngleSchedule> cluster6_schedule(double t1, double t2, double t3) {
    const double half_pi = std::numbers::pi / 2;
    return {AngleSchedule::from_last_level({t1, t2, t3, 0.0}),
            AngleSchedule::from_last_level({t1, half_pi - t2, t3, half_pi})};
}

/// Product of Bell pairs (|00>+|11>)/sqrt(2) across A_i B_i, returned in
/// A1..An B1..Bn order.
inline StateVector bell_product_reference(int n) {
    detail::check_qubit_count(n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector bell(2, {inv_sqrt2, 0.0, 0.0, inv_sqrt2});
    StateVector interleaved = bell;
    for (int i = 1; i < n; ++i) interleaved = kron(interleaved, bell);
    if (n == 1) return interleaved;
    // interleaved order is A1 B1 A2 B2 ...; relabel into block order
    std::vector<int> perm(2 * n);
    for (int i = 1; i <= n; ++i) {
        perm[2 * i - 2] = i;
        perm[2 * i - 1] = n + i;
    }
    return permute_qubits(interleaved, perm);
}

/// Reduced state on the last qubit pair (A_n, B_n).
inline DensityMatrix reduced_last_pair(const ResourceState &r) {
    return partial_trace(r.state, {r.n, 2 * r.n});
}

/// The {|00>,|11>} block of the reduced last-pair state, in closed form.
struct BlockCoefficients {
    double diagonal = 0.0;     // <00|rho|00> = <11|rho|11>
    double off_diagonal = 0.0; // <00|rho|11> = <11|rho|00>
};

/**
 * @brief Closed form for the last-pair reduced block of the n=3 family:
 * 1/8 of the pairwise angle sums, the pair-1 term entering through
 * cos^2(t2 + t2') and the others through cos^2(t - t').
 */
inline BlockCoefficients closed_form_block(std::span<const double> a_angles,
                                           std::span<const double> b_angles) {
    if (a_angles.size() != 4 || b_angles.size() != 4) {
        throw std::invalid_argument("closed_form_block expects four last-level angles per side");
    }
    auto c2 = [](double x) {
        const double c = std::cos(x);
        return c * c;
    };
    const double p0 = c2(a_angles[0] - b_angles[0]);
    const double p1 = c2(a_angles[1] + b_angles[1]);
    const double p2 = c2(a_angles[2] - b_angles[2]);
    const double p3 = c2(a_angles[3] - b_angles[3]);
    return {(p0 + p1 + p2 + p3) / 8.0, (p0 - p1 + p2 + p3) / 8.0};
}

} // namespace telecluster
