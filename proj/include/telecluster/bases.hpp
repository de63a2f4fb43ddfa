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
 * Recursive angle-parameterized orthonormal basis families.
 *
 * A basis over n qubits is grown one qubit at a time. Level l contributes
 * 2^(l-1) angles; prefix vector p of level l-1 spawns the pair
 *
 *   vector 2p   = prefix_p (x) ( cos(t) |0> + sin(t) |1>)
 *   vector 2p+1 = prefix_p (x) (-sin(t) |0> + cos(t) |1>)
 *
 * with t the pair's angle. The A-side family deviates in exactly one place:
 * at the outermost level, pair p = 1 attaches (sin(t) |0> - cos(t) |1>) as
 * its odd vector, i.e. vectors 2 and 3 of the finished basis carry the
 * exceptional sign. Prefix levels always follow the uniform rule, so an
 * all-zero schedule yields computational prefixes on both sides. The
 * `uniform_signs` flag switches the A side to the uniform rule everywhere
 * (a single-vector sign flip; orthonormality is unaffected either way).
 *
 * Angles may be any finite reals. The natural parameter range for the
 * family is [0, pi/2], but nothing here requires it.
 */

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "telecluster/qcore.hpp"
#include "telecluster/rng.hpp"

namespace telecluster {

/**
 * @brief Angles organizing a recursive basis family: level l (1-based) holds
 * exactly 2^(l-1) entries, in radians.
 */
struct AngleSchedule {
    int n = 0;
    std::vector<std::vector<double>> levels;

    AngleSchedule() = default;

    AngleSchedule(int qubits, std::vector<std::vector<double>> lv)
        : n(qubits), levels(std::move(lv)) {
        detail::check_qubit_count(n);
        if (static_cast<int>(levels.size()) != n) {
            throw std::invalid_argument("schedule must have one angle list per level");
        }
        for (int l = 0; l < n; ++l) {
            if (levels[l].size() != detail::pow2(l)) {
                throw std::invalid_argument("level " + std::to_string(l + 1) +
                                            " must hold 2^" + std::to_string(l) + " angles");
            }
            for (double a : levels[l]) {
                if (!std::isfinite(a)) throw std::invalid_argument("angles must be finite");
            }
        }
    }

    static AngleSchedule zeros(int n) {
        std::vector<std::vector<double>> lv;
        for (int l = 0; l < n; ++l) lv.emplace_back(detail::pow2(l), 0.0);
        return AngleSchedule(n, std::move(lv));
    }

    /// Zero prefix levels, given angles at the last level.
    static AngleSchedule from_last_level(std::vector<double> last) {
        int n = 1;
        while (detail::pow2(n - 1) < last.size()) ++n;
        if (detail::pow2(n - 1) != last.size()) {
            throw std::invalid_argument("last-level angle count must be a power of 2");
        }
        std::vector<std::vector<double>> lv;
        for (int l = 0; l + 1 < n; ++l) lv.emplace_back(detail::pow2(l), 0.0);
        lv.push_back(std::move(last));
        return AngleSchedule(n, std::move(lv));
    }

    const std::vector<double> &last_level() const { return levels.back(); }
};

/// Uniform random angles in [lo, hi) at every level.
inline AngleSchedule random_schedule(int n, std::mt19937_64 &gen, double lo = 0.0,
                                     double hi = std::numbers::pi / 2) {
    std::vector<std::vector<double>> lv;
    for (int l = 0; l < n; ++l) {
        std::vector<double> row(detail::pow2(l));
        for (double &a : row) a = uniform_in(gen, lo, hi);
        lv.push_back(std::move(row));
    }
    return AngleSchedule(n, std::move(lv));
}

enum class BasisSide { A, B, Generic };

/// 2^n ordered orthonormal vectors over n qubits.
struct OrthonormalBasis {
    int n = 0;
    BasisSide side = BasisSide::Generic;
    std::vector<StateVector> vectors;
};

namespace detail {

inline std::vector<std::vector<cplx>> attach_level(const std::vector<std::vector<cplx>> &prefixes,
                                                   const std::vector<double> &angles,
                                                   bool exceptional_pair1) {
    std::vector<std::vector<cplx>> out;
    out.reserve(2 * prefixes.size());
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
        const double c = std::cos(angles[p]);
        const double s = std::sin(angles[p]);
        const auto &pre = prefixes[p];
        std::vector<cplx> even(2 * pre.size());
        std::vector<cplx> odd(2 * pre.size());
        const bool flip = exceptional_pair1 && p == 1;
        for (std::size_t i = 0; i < pre.size(); ++i) {
            even[2 * i] = pre[i] * c;
            even[2 * i + 1] = pre[i] * s;
            if (flip) {
                odd[2 * i] = pre[i] * s;
                odd[2 * i + 1] = pre[i] * -c;
            } else {
                odd[2 * i] = pre[i] * -s;
                odd[2 * i + 1] = pre[i] * c;
            }
        }
        out.push_back(std::move(even));
        out.push_back(std::move(odd));
    }
    return out;
}

inline OrthonormalBasis build_recursive(const AngleSchedule &schedule, BasisSide side,
                                        bool exceptional_last_level) {
    std::vector<std::vector<cplx>> vecs{{cplx{1.0, 0.0}}};
    for (int l = 0; l < schedule.n; ++l) {
        const bool final_level = (l == schedule.n - 1);
        vecs = attach_level(vecs, schedule.levels[l], exceptional_last_level && final_level);
    }
    OrthonormalBasis basis;
    basis.n = schedule.n;
    basis.side = side;
    basis.vectors.reserve(vecs.size());
    for (auto &v : vecs) basis.vectors.emplace_back(schedule.n, std::move(v));
    return basis;
}

} // namespace detail

/// A-side family; carries the exceptional pair-1 sign unless `uniform_signs`.
inline OrthonormalBasis build_basis_a(const AngleSchedule &schedule, bool uniform_signs = false) {
    return detail::build_recursive(schedule, BasisSide::A, !uniform_signs);
}

/// B-side family; uniform sign rule at every pair.
inline OrthonormalBasis build_basis_b(const AngleSchedule &schedule) {
    return detail::build_recursive(schedule, BasisSide::B, false);
}

/// Computational basis: vector K is |K>.
inline OrthonormalBasis computational_basis(int n) {
    detail::check_qubit_count(n);
    OrthonormalBasis basis;
    basis.n = n;
    basis.side = BasisSide::Generic;
    const std::size_t dim = detail::pow2(n);
    basis.vectors.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) basis.vectors.push_back(StateVector::computational(n, k));
    return basis;
}

/**
 * @brief Basis from the ordered columns of a unitary matrix.
 *
 * Rejects matrices farther than 1e-10 from unitary, reporting the measured
 * deviation.
 */
inline OrthonormalBasis basis_from_columns(const Operator &matrix) {
    const double dev = unitarity_deviation(matrix);
    if (dev > 1e-10) {
        throw std::invalid_argument("matrix is not unitary: max |U U^dag - I| = " +
                                    std::to_string(dev));
    }
    int n = 0;
    while (detail::pow2(n) < matrix.dim) ++n;
    OrthonormalBasis basis;
    basis.n = n;
    basis.side = BasisSide::Generic;
    basis.vectors.reserve(matrix.dim);
    for (std::size_t col = 0; col < matrix.dim; ++col) {
        std::vector<cplx> v(matrix.dim);
        for (std::size_t row = 0; row < matrix.dim; ++row) v[row] = matrix.at(row, col);
        basis.vectors.emplace_back(n, std::move(v));
    }
    return basis;
}

/// Coefficient vector a_K = <basis_K|state>.
inline std::vector<cplx> coefficients_in_basis(const StateVector &state,
                                               const OrthonormalBasis &basis) {
    if (state.num_qubits != basis.n) {
        throw std::invalid_argument("state and basis qubit counts differ");
    }
    std::vector<cplx> coeffs;
    coeffs.reserve(basis.vectors.size());
    for (const StateVector &v : basis.vectors) coeffs.push_back(inner(v, state));
    return coeffs;
}

/// max |G - I| over the basis Gram matrix G_jk = <v_j|v_k>.
inline double gram_deviation(const OrthonormalBasis &basis) {
    double dev = 0.0;
    const std::size_t dim = basis.vectors.size();
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = j; k < dim; ++k) {
            const cplx g = inner(basis.vectors[j], basis.vectors[k]);
            const cplx expect = (j == k) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(g - expect));
        }
    return dev;
}

} // namespace telecluster
