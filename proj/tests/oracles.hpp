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

// Test-only oracles, kept independent of the library kernels they check:
// the partial trace here goes through the full outer-product matrix and
// explicit digit bookkeeping, spectra and random unitaries come from Eigen.

#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <complex>
#include <random>
#include <vector>

#include "telecluster/qcore.hpp"
#include "telecluster/rng.hpp"

namespace oracle {

using telecluster::cplx;
using telecluster::DensityMatrix;
using telecluster::StateVector;

inline Eigen::MatrixXcd to_eigen(const DensityMatrix &rho) {
    const auto d = static_cast<Eigen::Index>(rho.dim());
    Eigen::MatrixXcd m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) = rho.at(i, j);
    return m;
}

/// Eigenvalues of a Hermitian density matrix, ascending.
inline std::vector<double> spectrum(const DensityMatrix &rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(rho));
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + solver.eigenvalues().size());
    return out;
}

/// Brute-force partial trace: form |psi><psi| in full, then contract the
/// traced digits index by index. Kept qubits in ascending order, as in the
/// library, but sharing no code with it.
inline DensityMatrix naive_partial_trace(const StateVector &psi, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    const int m = psi.num_qubits;
    const std::size_t dim = psi.dim();
    std::vector<cplx> full(dim * dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) full[r * dim + c] = psi.amps[r] * std::conj(psi.amps[c]);

    std::vector<int> traced;
    for (int q = 1; q <= m; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
    }
    const int k = static_cast<int>(keep.size());
    const std::size_t dk = std::size_t{1} << k;
    const std::size_t dt = std::size_t{1} << traced.size();

    auto assemble = [&](std::size_t keep_bits, std::size_t traced_bits) {
        std::size_t idx = 0;
        for (int q = 1; q <= m; ++q) {
            idx <<= 1;
            const auto pos_k = std::find(keep.begin(), keep.end(), q);
            if (pos_k != keep.end()) {
                const int slot = static_cast<int>(pos_k - keep.begin());
                idx |= (keep_bits >> (k - 1 - slot)) & 1u;
            } else {
                const auto pos_t = std::find(traced.begin(), traced.end(), q);
                const int slot = static_cast<int>(pos_t - traced.begin());
                idx |= (traced_bits >> (traced.size() - 1 - slot)) & 1u;
            }
        }
        return idx;
    };

    std::vector<cplx> rho(dk * dk, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            cplx s{0.0, 0.0};
            for (std::size_t t = 0; t < dt; ++t) {
                s += full[assemble(i, t) * dim + assemble(j, t)];
            }
            rho[i * dk + j] = s;
        }
    return DensityMatrix(k, std::move(rho));
}

/// Haar-ish random unitary: QR of a complex Gaussian matrix.
inline telecluster::Operator random_unitary(std::size_t dim, std::mt19937_64 &gen) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(dim); ++i)
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(dim); ++j)
            g(i, j) = cplx{telecluster::gaussian(gen), telecluster::gaussian(gen)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    std::vector<cplx> entries(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            entries[i * dim + j] = q(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return telecluster::Operator(dim, std::move(entries));
}

/// The constrained-schedule six-qubit state, frozen term by term from the
/// hand expansion of the defining sum (independent of the library's copy).
inline StateVector frozen_cluster6() {
    std::vector<cplx> amps(64, cplx{0.0, 0.0});
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    // pair 0: |00,00> (x) (|00>+|11>) on (A3,B3)
    amps[0b000000] = a;
    amps[0b001001] = a;
    // pair 1: |01,01> (x) (|01>+|10>)
    amps[0b010011] = a;
    amps[0b011010] = a;
    // pair 2: |10,10> (x) (|00>+|11>)
    amps[0b100100] = a;
    amps[0b101101] = a;
    // pair 3: |11,11> (x) (|01>-|10>)
    amps[0b110111] = a;
    amps[0b111110] = -a;
    return StateVector(6, std::move(amps));
}

} // namespace oracle
