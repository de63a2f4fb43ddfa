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
 * End-to-end teleportation and dense coding over a resource state.
 *
 * Teleportation: the joint state phi (x) xi is measured on A'A in the Pi
 * basis; every outcome occurs with probability 4^-n and leaves the B half
 * in the outcome's Pauli string applied to phi, so the outcome's own string
 * is also the correction (all three Paulis are involutive).
 *
 * Dense coding: the 4^n Pauli strings on the A half of xi generate an
 * orthonormal family of maximally entangled states; decoding is exhaustive
 * overlap against that family.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "telecluster/measurement.hpp"
#include "telecluster/qcore.hpp"
#include "telecluster/resource.hpp"

namespace telecluster {

/// Squared-overlap threshold above which dense decoding accepts a codeword.
inline constexpr double decode_overlap_tol = 1e-9;

/// Transcript of one teleportation round.
struct TeleportRecord {
    PauliLabels outcome;
    double probability = 0.0;
    StateVector bob_pre;    // B half right after the projection
    PauliLabels correction; // equals the outcome
    StateVector bob_post;   // after Bob's Pauli correction
    double fidelity = 0.0;  // |<bob_post|phi>|^2
};

namespace detail {

inline void check_teleport_inputs(const StateVector &phi, const ResourceState &r) {
    if (phi.num_qubits != r.n) {
        throw std::invalid_argument("input state size does not match resource");
    }
    if (!is_normalized(phi)) {
        throw std::invalid_argument("input state must be normalized");
    }
}

inline TeleportRecord run_outcome(const StateVector &phi, const StateVector &joint,
                                  const MeasurementBasis &basis, const PauliLabels &outcome) {
    const Projection proj = project(joint, basis, outcome);
    if (!proj.post) {
        throw std::runtime_error("projection produced a zero-probability teleportation outcome");
    }
    TeleportRecord rec;
    rec.outcome = outcome;
    rec.probability = proj.probability;
    rec.bob_pre = *proj.post;
    rec.correction = outcome;
    rec.bob_post = apply_pauli_labels(outcome.labels, 1, rec.bob_pre);
    rec.fidelity = fidelity_pure(rec.bob_post, phi);
    return rec;
}

} // namespace detail

/// One sampled teleportation round for the given seed.
inline TeleportRecord teleport_once(const StateVector &phi, const ResourceState &r,
                                    std::uint64_t seed) {
    detail::check_teleport_inputs(phi, r);
    const StateVector joint = kron(phi, r.state);
    const MeasurementBasis basis = build_pi_basis(r.basis_a, r.basis_b);
    const PauliLabels outcome = sample_outcome(joint, basis, seed);
    return detail::run_outcome(phi, joint, basis, outcome);
}

/// Deterministic sweep over all 4^n outcomes, in label order.
inline std::vector<TeleportRecord> teleport_exhaustive(const StateVector &phi,
                                                       const ResourceState &r) {
    detail::check_teleport_inputs(phi, r);
    const StateVector joint = kron(phi, r.state);
    const MeasurementBasis basis = build_pi_basis(r.basis_a, r.basis_b);
    std::vector<TeleportRecord> records;
    records.reserve(basis.vectors.size());
    for (std::size_t idx = 0; idx < basis.vectors.size(); ++idx) {
        records.push_back(detail::run_outcome(phi, joint, basis,
                                              PauliLabels::from_index(r.n, idx)));
    }
    return records;
}

/**
 * @brief Residual norm of the joint-state decomposition identity
 *
 *   phi (x) xi  =  2^-n sum_L  Pi_L (x) (P_L phi),
 *
 * assembled from the measurement basis and Pauli-corrected copies of phi.
 * Zero (to rounding) for every matched basis pair.
 */
inline double verify_decomposition(const StateVector &phi, const ResourceState &r) {
    detail::check_teleport_inputs(phi, r);
    const StateVector lhs = kron(phi, r.state);
    const MeasurementBasis basis = build_pi_basis(r.basis_a, r.basis_b);
    std::vector<cplx> rhs(lhs.dim(), cplx{0.0, 0.0});
    const double scale = 1.0 / static_cast<double>(detail::pow2(r.n));
    for (std::size_t idx = 0; idx < basis.vectors.size(); ++idx) {
        const PauliLabels labels = PauliLabels::from_index(r.n, idx);
        const StateVector corrected = apply_pauli_labels(labels.labels, 1, phi);
        const StateVector &pi_vec = basis.vectors[idx];
        for (std::size_t x = 0; x < pi_vec.dim(); ++x) {
            const cplx c = pi_vec.amps[x] * scale;
            if (c == cplx{0.0, 0.0}) continue;
            const std::size_t base = x * corrected.dim();
            for (std::size_t b = 0; b < corrected.dim(); ++b) {
                rhs[base + b] += c * corrected.amps[b];
            }
        }
    }
    double sq = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) sq += std::norm(lhs.amps[i] - rhs[i]);
    return std::sqrt(sq);
}

/**
 * @brief Deviation of the A' -> B map <Pi_0...0 | xi> from 2^-n times the
 * identity. The contraction collapses to the completeness sum of the B-side
 * family, so the deviation vanishes for every orthonormal pair.
 */
inline double transfer_operator_check(const ResourceState &r) {
    const int n = r.n;
    const std::size_t terms = detail::pow2(n);
    // Pi_0...0 as a matrix over (A' row, A col)
    std::vector<cplx> pi0(terms * terms, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < terms; ++k) {
        const StateVector &bp = r.basis_b.vectors[k];
        const StateVector &a = r.basis_a.vectors[k];
        for (std::size_t i = 0; i < terms; ++i) {
            const cplx bi = bp.amps[i];
            if (bi == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < terms; ++j) pi0[i * terms + j] += bi * a.amps[j];
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(terms));
    for (cplx &c : pi0) c *= scale;

    const double expect = 1.0 / static_cast<double>(terms);
    double dev = 0.0;
    for (std::size_t b = 0; b < terms; ++b) {
        for (std::size_t ap = 0; ap < terms; ++ap) {
            cplx m{0.0, 0.0};
            for (std::size_t a = 0; a < terms; ++a) {
                m += std::conj(pi0[ap * terms + a]) * r.state.amps[a * terms + b];
            }
            const cplx target = (b == ap) ? cplx{expect, 0.0} : cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(m - target));
        }
    }
    return dev;
}

// --- dense coding --------------------------------------------------------

/// Encode a 2n-bit message: Pauli string on the A half of the resource.
inline StateVector dense_encode(const ResourceState &r, const PauliLabels &message) {
    if (message.n() != r.n) {
        throw std::invalid_argument("message label count does not match resource");
    }
    return apply_pauli_labels(message.labels, 1, r.state);
}

/**
 * @brief Decode by exhaustive overlap against all 4^n codewords; empty when
 * no codeword reaches squared overlap 1 - decode_overlap_tol.
 */
inline std::optional<PauliLabels> dense_decode(const ResourceState &r,
                                               const StateVector &encoded) {
    if (encoded.num_qubits != 2 * r.n) {
        throw std::invalid_argument("encoded state must cover all 2n qubits");
    }
    const std::size_t count = detail::pow2(2 * r.n);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const PauliLabels labels = PauliLabels::from_index(r.n, idx);
        const StateVector codeword = dense_encode(r, labels);
        if (std::norm(inner(codeword, encoded)) >= 1.0 - decode_overlap_tol) return labels;
    }
    return std::nullopt;
}

/// One dense-coding round trip.
struct DenseCodingRecord {
    PauliLabels message;
    StateVector encoded;
    std::optional<PauliLabels> decoded;
};

inline DenseCodingRecord dense_roundtrip(const ResourceState &r, const PauliLabels &message) {
    DenseCodingRecord rec;
    rec.message = message;
    rec.encoded = dense_encode(r, message);
    rec.decoded = dense_decode(r, rec.encoded);
    return rec;
}

/// Orthonormality and entanglement audit of the full codeword family.
struct DenseGramReport {
    double max_off_diagonal = 0.0;      // over the codeword Gram matrix
    double max_marginal_deviation = 0.0; // each codeword's A half vs I/2^n
};

inline DenseGramReport dense_gram_check(const ResourceState &r) {
    const std::size_t count = detail::pow2(2 * r.n);
    std::vector<StateVector> codewords;
    codewords.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        codewords.push_back(dense_encode(r, PauliLabels::from_index(r.n, idx)));
    }
    DenseGramReport report;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            report.max_off_diagonal =
                std::max(report.max_off_diagonal, std::abs(inner(codewords[i], codewords[j])));
        }
    }
    std::vector<int> a_half(r.n);
    for (int q = 1; q <= r.n; ++q) a_half[q - 1] = q;
    for (const StateVector &cw : codewords) {
        const DensityMatrix marginal = partial_trace(cw, a_half);
        report.max_marginal_deviation =
            std::max(report.max_marginal_deviation, deviation_from_maximally_mixed(marginal));
    }
    return report;
}

} // namespace telecluster
