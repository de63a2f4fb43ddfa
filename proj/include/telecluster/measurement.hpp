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
 * The joint measurement basis on A'A and its use: Born probabilities,
 * projection onto an outcome, and seeded outcome sampling.
 *
 * The basis is generated from one maximally entangled vector,
 *
 *   Pi_0...0 = 2^(-n/2) sum_K  b_K (x) a_K     (B-side family on A',
 *                                               A-side family on A),
 *
 * by the 4^n Pauli strings acting on the A' qubits. Outcomes are labeled
 * by n base-4 digits in lexicographic order.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "telecluster/bases.hpp"
#include "telecluster/qcore.hpp"
#include "telecluster/rng.hpp"

namespace telecluster {

/// Projections with Born probability below this are reported as impossible
/// outcomes rather than renormalized into a state.
inline constexpr double zero_probability_tol = 1e-14;

/**
 * @brief Ordered Pauli labels (i_1, ..., i_n), each in 0..3.
 *
 * The classical encoding of an outcome is 2 bits per label, label i_1
 * first, high bit of each label first: 2n bits total.
 */
struct PauliLabels {
    std::vector<int> labels;

    PauliLabels() = default;

    explicit PauliLabels(std::vector<int> l) : labels(std::move(l)) {
        if (labels.empty()) throw std::invalid_argument("empty label list");
        for (int v : labels) {
            if (v < 0 || v > 3) throw std::invalid_argument("pauli label not in {0,1,2,3}");
        }
    }

    int n() const { return static_cast<int>(labels.size()); }

    /// Position in the lexicographic enumeration of all 4^n label tuples.
    std::size_t index() const {
        std::size_t idx = 0;
        for (int v : labels) idx = idx * 4 + static_cast<std::size_t>(v);
        return idx;
    }

    static PauliLabels from_index(int n, std::size_t idx) {
        std::vector<int> l(n);
        for (int j = n - 1; j >= 0; --j) {
            l[j] = static_cast<int>(idx & 3u);
            idx >>= 2;
        }
        return PauliLabels(std::move(l));
    }

    /// 2n-bit classical string for this outcome.
    std::string bits() const {
        std::string s;
        s.reserve(2 * labels.size());
        for (int v : labels) {
            s.push_back((v & 2) ? '1' : '0');
            s.push_back((v & 1) ? '1' : '0');
        }
        return s;
    }

    bool operator==(const PauliLabels &) const = default;
};

/// The 4^n orthonormal measurement vectors over 2n qubits (A' then A).
struct MeasurementBasis {
    int n = 0;
    std::vector<StateVector> vectors;
};

/**
 * @brief Build the joint A'A measurement basis from a basis pair.
 *
 * Vector 0 pairs the B-side family on A' with the A-side family on A; the
 * remaining vectors are its images under the Pauli strings on A'.
 */
inline MeasurementBasis build_pi_basis(const OrthonormalBasis &basis_a,
                                       const OrthonormalBasis &basis_b) {
    if (basis_a.n != basis_b.n) {
        throw std::invalid_argument("basis pair qubit counts differ");
    }
    const int n = basis_a.n;
    const std::size_t terms = detail::pow2(n);
    std::vector<cplx> base(terms * terms, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < terms; ++k) {
        const StateVector &bp = basis_b.vectors[k];
        const StateVector &a = basis_a.vectors[k];
        for (std::size_t i = 0; i < terms; ++i) {
            const cplx bi = bp.amps[i];
            if (bi == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < terms; ++j) base[i * terms + j] += bi * a.amps[j];
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(terms));
    for (cplx &a : base) a *= scale;
    const StateVector pi0(2 * n, std::move(base));

    MeasurementBasis basis;
    basis.n = n;
    const std::size_t count = detail::pow2(2 * n);
    basis.vectors.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
        const PauliLabels labels = PauliLabels::from_index(n, idx);
        basis.vectors.push_back(apply_pauli_labels(labels.labels, 1, pi0));
    }
    return basis;
}

namespace detail {

// Contraction of one measurement vector against the leading 2n qubits of a
// joint state; returns the unnormalized residual on the trailing qubits.
inline std::vector<cplx> contract_leading(const StateVector &vec, const StateVector &joint) {
    const std::size_t rest_dim = joint.dim() / vec.dim();
    std::vector<cplx> residual(rest_dim, cplx{0.0, 0.0});
    for (std::size_t x = 0; x < vec.dim(); ++x) {
        const cplx c = std::conj(vec.amps[x]);
        if (c == cplx{0.0, 0.0}) continue;
        const std::size_t base = x * rest_dim;
        for (std::size_t b = 0; b < rest_dim; ++b) residual[b] += c * joint.amps[base + b];
    }
    return residual;
}

inline void check_joint_shape(const StateVector &joint, const MeasurementBasis &basis) {
    if (joint.num_qubits <= 2 * basis.n) {
        throw std::invalid_argument("joint state must extend beyond the 2n measured qubits");
    }
}

} // namespace detail

/**
 * @brief Born probabilities of all 4^n outcomes for a joint state ordered
 * A'1..A'n A1..An B1..; entries sum to 1 for a normalized input.
 */
inline std::vector<double> born_probabilities(const StateVector &joint,
                                              const MeasurementBasis &basis) {
    detail::check_joint_shape(joint, basis);
    std::vector<double> probs;
    probs.reserve(basis.vectors.size());
    for (const StateVector &vec : basis.vectors) {
        const auto residual = detail::contract_leading(vec, joint);
        double p = 0.0;
        for (const cplx &r : residual) p += std::norm(r);
        probs.push_back(p);
    }
    return probs;
}

/// Result of projecting a joint state onto one measurement outcome. `post`
/// is empty when the outcome has (numerically) zero probability.
struct Projection {
    double probability = 0.0;
    std::optional<StateVector> post;
};

inline Projection project(const StateVector &joint, const MeasurementBasis &basis,
                          const PauliLabels &outcome) {
    detail::check_joint_shape(joint, basis);
    if (outcome.n() != basis.n) {
        throw std::invalid_argument("outcome label count does not match basis");
    }
    const StateVector &vec = basis.vectors[outcome.index()];
    auto residual = detail::contract_leading(vec, joint);
    double p = 0.0;
    for (const cplx &r : residual) p += std::norm(r);
    Projection result;
    result.probability = p;
    if (p >= zero_probability_tol) {
        const double scale = 1.0 / std::sqrt(p);
        for (cplx &r : residual) r *= scale;
        result.post = StateVector(joint.num_qubits - 2 * basis.n, std::move(residual));
    }
    return result;
}

/**
 * @brief Draw one outcome from the Born distribution by inverse CDF on a
 * generator owned by this call; a given seed always yields the same outcome.
 */
inline PauliLabels sample_outcome(const StateVector &joint, const MeasurementBasis &basis,
                                  std::uint64_t seed) {
    const std::vector<double> probs = born_probabilities(joint, basis);
    std::mt19937_64 gen(seed);
    const double u = uniform_unit(gen);
    double acc = 0.0;
    for (std::size_t idx = 0; idx < probs.size(); ++idx) {
        acc += probs[idx];
        if (u < acc) return PauliLabels::from_index(basis.n, idx);
    }
    return PauliLabels::from_index(basis.n, probs.size() - 1);
}

} // namespace telecluster
