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
 * Dense complex linear algebra over multi-qubit state vectors and operators:
 * tensor products, subsystem application, inner products, partial trace,
 * qubit permutation, fidelity, purity.
 *
 * Conventions used throughout the library:
 *  - Qubits are numbered from 1; qubit 1 is the most significant bit of the
 *    amplitude index, so |b1 b2 ... bm> sits at index (b1 b2 ... bm) read as
 *    binary. Bit strings in the API are therefore read left to right.
 *  - Everything is immutable after construction and every operation is a
 *    pure function; concurrent reads are safe.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace telecluster {

using cplx = std::complex<double>;

/// Tolerance for structural equalities (orthonormality, Hermiticity, exact
/// amplitude identities).
inline constexpr double structural_tol = 1e-12;

/// Tolerance for protocol-level quantities accumulated over many terms
/// (fidelities, Born probability sums, decomposition residuals).
inline constexpr double protocol_tol = 1e-10;

/// Hard sanity bound on dense storage; the CLI applies a stricter
/// configurable cap on joint-state sizes.
inline constexpr int max_dense_qubits = 28;

namespace detail {

inline std::size_t pow2(int n) { return std::size_t{1} << n; }

inline void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > max_dense_qubits) {
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                    " outside supported range [1, " +
                                    std::to_string(max_dense_qubits) + "]");
    }
}

} // namespace detail

/**
 * @brief Pure state of `num_qubits` qubits as a dense amplitude vector.
 *
 * Amplitudes are stored in index order with qubit 1 as the most significant
 * index bit. States are not forcibly normalized; operations whose contracts
 * require a normalized input validate it.
 */
struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amps;

    StateVector() = default;

    StateVector(int n, std::vector<cplx> amplitudes)
        : num_qubits(n), amps(std::move(amplitudes)) {
        detail::check_qubit_count(n);
        if (amps.size() != detail::pow2(n)) {
            throw std::invalid_argument("amplitude count " + std::to_string(amps.size()) +
                                        " does not match 2^" + std::to_string(n));
        }
    }

    /// Computational basis state |index> (index read with qubit 1 as MSB).
    static StateVector computational(int n, std::uint64_t index) {
        detail::check_qubit_count(n);
        if (index >= detail::pow2(n)) {
            throw std::invalid_argument("basis index out of range");
        }
        std::vector<cplx> a(detail::pow2(n), cplx{0.0, 0.0});
        a[index] = cplx{1.0, 0.0};
        return StateVector(n, std::move(a));
    }

    std::size_t dim() const { return amps.size(); }

    double squared_norm() const {
        double s = 0.0;
        for (const cplx &a : amps) s += std::norm(a);
        return s;
    }

    double norm() const { return std::sqrt(squared_norm()); }
};

inline bool is_normalized(const StateVector &v, double tol = 1e-9) {
    return std::abs(v.squared_norm() - 1.0) <= tol;
}

inline StateVector normalized(StateVector v) {
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    for (cplx &a : v.amps) a /= n;
    return v;
}

/// Square complex matrix of power-of-two dimension, row major.
struct Operator {
    std::size_t dim = 0;
    std::vector<cplx> entries;

    Operator() = default;

    Operator(std::size_t d, std::vector<cplx> e) : dim(d), entries(std::move(e)) {
        if (d == 0 || (d & (d - 1)) != 0) {
            throw std::invalid_argument("operator dimension must be a positive power of 2");
        }
        if (entries.size() != d * d) {
            throw std::invalid_argument("operator entry count does not match dim*dim");
        }
    }

    static Operator identity(std::size_t d) {
        std::vector<cplx> e(d * d, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < d; ++i) e[i * d + i] = cplx{1.0, 0.0};
        return Operator(d, std::move(e));
    }

    cplx &at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
    const cplx &at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
};

/**
 * @brief Hermitian trace-one matrix over `num_qubits` qubits, row major.
 *
 * Constructed by partial_trace or directly from entries; the constructor
 * checks shape only, so callers building one by hand own the Hermiticity
 * and trace conditions.
 */
struct DensityMatrix {
    int num_qubits = 0;
    std::vector<cplx> entries;

    DensityMatrix() = default;

    DensityMatrix(int n, std::vector<cplx> e) : num_qubits(n), entries(std::move(e)) {
        detail::check_qubit_count(n);
        const std::size_t d = detail::pow2(n);
        if (entries.size() != d * d) {
            throw std::invalid_argument("density matrix entry count does not match 4^n");
        }
    }

    std::size_t dim() const { return detail::pow2(num_qubits); }

    cplx &at(std::size_t row, std::size_t col) { return entries[row * dim() + col]; }
    const cplx &at(std::size_t row, std::size_t col) const { return entries[row * dim() + col]; }

    cplx trace() const {
        cplx t{0.0, 0.0};
        for (std::size_t i = 0; i < dim(); ++i) t += at(i, i);
        return t;
    }
};

// --- tensor products ---------------------------------------------------------

/// Tensor product; `a`'s qubits become the more significant index bits.
inline StateVector kron(const StateVector &a, const StateVector &b) {
    std::vector<cplx> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const cplx ai = a.amps[i];
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = ai * b.amps[j];
        }
    }
    return StateVector(a.num_qubits + b.num_qubits, std::move(out));
}

inline Operator kron(const Operator &a, const Operator &b) {
    const std::size_t d = a.dim * b.dim;
    std::vector<cplx> out(d * d);
    for (std::size_t ra = 0; ra < a.dim; ++ra)
        for (std::size_t ca = 0; ca < a.dim; ++ca) {
            const cplx v = a.at(ra, ca);
            for (std::size_t rb = 0; rb < b.dim; ++rb)
                for (std::size_t cb = 0; cb < b.dim; ++cb) {
                    out[(ra * b.dim + rb) * d + (ca * b.dim + cb)] = v * b.at(rb, cb);
                }
        }
    return Operator(d, std::move(out));
}

// --- Pauli operators ---------------------------------------------------------

/**
 * @brief The single-qubit operators sigma^(0..3) = I, X, Y, Z
 * with Y = ((0,-i),(i,0)).
 */
inline Operator pauli(int label) {
    switch (label) {
        case 0: return Operator(2, {1, 0, 0, 1});
        case 1: return Operator(2, {0, 1, 1, 0});
        case 2: return Operator(2, {cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}});
        case 3: return Operator(2, {1, 0, 0, -1});
        default:
            throw std::invalid_argument("pauli label " + std::to_string(label) +
                                        " not in {0,1,2,3}");
    }
}

/// Tensor product sigma^(l1) x sigma^(l2) x ... over the given labels.
inline Operator pauli_string(const std::vector<int> &labels) {
    if (labels.empty()) throw std::invalid_argument("empty pauli label list");
    Operator out = pauli(labels[0]);
    for (std::size_t j = 1; j < labels.size(); ++j) out = kron(out, pauli(labels[j]));
    return out;
}

// --- operator algebra helpers ------------------------------------------------

inline Operator adjoint(const Operator &op) {
    std::vector<cplx> out(op.dim * op.dim);
    for (std::size_t r = 0; r < op.dim; ++r)
        for (std::size_t c = 0; c < op.dim; ++c) out[c * op.dim + r] = std::conj(op.at(r, c));
    return Operator(op.dim, std::move(out));
}

inline Operator matmul(const Operator &a, const Operator &b) {
    if (a.dim != b.dim) throw std::invalid_argument("operator dimension mismatch in matmul");
    std::vector<cplx> out(a.dim * a.dim, cplx{0.0, 0.0});
    for (std::size_t r = 0; r < a.dim; ++r)
        for (std::size_t k = 0; k < a.dim; ++k) {
            const cplx v = a.at(r, k);
            if (v == cplx{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < a.dim; ++c) out[r * a.dim + c] += v * b.at(k, c);
        }
    return Operator(a.dim, std::move(out));
}

inline cplx trace(const Operator &op) {
    cplx t{0.0, 0.0};
    for (std::size_t i = 0; i < op.dim; ++i) t += op.at(i, i);
    return t;
}

/// max_ij |op_ij - delta_ij|; zero exactly for the identity.
inline double deviation_from_identity(const Operator &op) {
    double dev = 0.0;
    for (std::size_t r = 0; r < op.dim; ++r)
        for (std::size_t c = 0; c < op.dim; ++c) {
            const cplx expect = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(op.at(r, c) - expect));
        }
    return dev;
}

/// max |U U^dag - I|; zero for exactly unitary U.
inline double unitarity_deviation(const Operator &op) {
    return deviation_from_identity(matmul(op, adjoint(op)));
}

// --- subsystem application ---------------------------------------------------

/**
 * @brief Apply `op` to the named qubits of `state`, identity elsewhere.
 *
 * `targets` are distinct 1-based qubit indices; the first target corresponds
 * to the most significant qubit of `op` (matching the kron convention).
 */
inline StateVector apply_on_subsystems(const Operator &op, const std::vector<int> &targets,
                                       const StateVector &state) {
    const int m = state.num_qubits;
    const int k = static_cast<int>(targets.size());
    if (k < 1 || op.dim != detail::pow2(k)) {
        throw std::invalid_argument("operator dimension does not match target count");
    }
    std::vector<int> shift(k);
    std::uint64_t tmask = 0;
    for (int i = 0; i < k; ++i) {
        const int q = targets[i];
        if (q < 1 || q > m) throw std::invalid_argument("target qubit out of range");
        shift[i] = m - q;
        const std::uint64_t bit = std::uint64_t{1} << shift[i];
        if (tmask & bit) throw std::invalid_argument("duplicate target qubit");
        tmask |= bit;
    }
    const std::size_t dim = state.dim();
    std::vector<cplx> out(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t row = 0;
        for (int i = 0; i < k; ++i) row = (row << 1) | ((idx >> shift[i]) & 1u);
        const std::size_t base = idx & ~tmask;
        cplx acc{0.0, 0.0};
        for (std::size_t col = 0; col < op.dim; ++col) {
            const cplx v = op.at(row, col);
            if (v == cplx{0.0, 0.0}) continue;
            std::size_t src = base;
            for (int i = 0; i < k; ++i) src |= ((col >> (k - 1 - i)) & std::size_t{1}) << shift[i];
            acc += v * state.amps[src];
        }
        out[idx] = acc;
    }
    return StateVector(m, std::move(out));
}

/// Apply sigma^(labels[j]) to qubit first_qubit + j, one qubit at a time.
inline StateVector apply_pauli_labels(const std::vector<int> &labels, int first_qubit,
                                      const StateVector &state) {
    StateVector out = state;
    for (std::size_t j = 0; j < labels.size(); ++j) {
        if (labels[j] == 0) continue;
        out = apply_on_subsystems(pauli(labels[j]), {first_qubit + static_cast<int>(j)}, out);
    }
    return out;
}

// --- contractions ------------------------------------------------------------

/// <a|b>, conjugate linear in `a`.
inline cplx inner(const StateVector &a, const StateVector &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("inner product size mismatch");
    }
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a.amps[i]) * b.amps[i];
    return s;
}

/// |<a|b>|^2 for normalized pure states; invariant under global phases.
inline double fidelity_pure(const StateVector &a, const StateVector &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("fidelity size mismatch");
    }
    if (!is_normalized(a) || !is_normalized(b)) {
        throw std::invalid_argument("fidelity_pure requires normalized states");
    }
    return std::norm(inner(a, b));
}

// --- partial trace -----------------------------------------------------------

namespace detail {

struct TraceLayout {
    std::vector<int> keep_shift;   // bit shifts of kept qubits, most significant first
    std::vector<int> traced_shift; // bit shifts of traced qubits
};

inline TraceLayout trace_layout(int m, const std::vector<int> &keep_sorted) {
    TraceLayout lo;
    std::vector<bool> kept(m + 1, false);
    for (int q : keep_sorted) {
        if (q < 1 || q > m) throw std::invalid_argument("keep qubit out of range");
        if (kept[q]) throw std::invalid_argument("duplicate qubit in keep set");
        kept[q] = true;
        lo.keep_shift.push_back(m - q);
    }
    for (int q = 1; q <= m; ++q) {
        if (!kept[q]) lo.traced_shift.push_back(m - q);
    }
    return lo;
}

inline std::size_t place_bits(std::size_t bits, const std::vector<int> &shifts) {
    std::size_t idx = 0;
    const int k = static_cast<int>(shifts.size());
    for (int i = 0; i < k; ++i) idx |= ((bits >> (k - 1 - i)) & std::size_t{1}) << shifts[i];
    return idx;
}

} // namespace detail

/**
 * @brief Reduced density matrix of a pure state on the `keep` qubits.
 *
 * The kept qubits appear in ascending original order. The result is exactly
 * Hermitian by construction (upper triangle computed, lower mirrored).
 */
inline DensityMatrix partial_trace(const StateVector &psi, std::vector<int> keep) {
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
    std::sort(keep.begin(), keep.end());
    const int m = psi.num_qubits;
    const auto layout = detail::trace_layout(m, keep);
    const int k = static_cast<int>(keep.size());
    const std::size_t dk = detail::pow2(k);
    const std::size_t dt = detail::pow2(m - k);
    std::vector<cplx> rho(dk * dk, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dk; ++i) {
        const std::size_t pi = detail::place_bits(i, layout.keep_shift);
        for (std::size_t j = i; j < dk; ++j) {
            const std::size_t pj = detail::place_bits(j, layout.keep_shift);
            cplx s{0.0, 0.0};
            for (std::size_t t = 0; t < dt; ++t) {
                const std::size_t pt = detail::place_bits(t, layout.traced_shift);
                s += psi.amps[pi | pt] * std::conj(psi.amps[pj | pt]);
            }
            rho[i * dk + j] = s;
            if (i != j) rho[j * dk + i] = std::conj(s);
        }
    }
    return DensityMatrix(k, std::move(rho));
}

/// Partial trace of a density matrix onto the `keep` qubits.
inline DensityMatrix partial_trace(const DensityMatrix &rho_in, std::vector<int> keep) {
    if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
    std::sort(keep.begin(), keep.end());
    const int m = rho_in.num_qubits;
    const auto layout = detail::trace_layout(m, keep);
    const int k = static_cast<int>(keep.size());
    const std::size_t dk = detail::pow2(k);
    const std::size_t dt = detail::pow2(m - k);
    const std::size_t dfull = detail::pow2(m);
    std::vector<cplx> rho(dk * dk, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dk; ++i) {
        const std::size_t pi = detail::place_bits(i, layout.keep_shift);
        for (std::size_t j = 0; j < dk; ++j) {
            const std::size_t pj = detail::place_bits(j, layout.keep_shift);
            cplx s{0.0, 0.0};
            for (std::size_t t = 0; t < dt; ++t) {
                const std::size_t pt = detail::place_bits(t, layout.traced_shift);
                s += rho_in.entries[(pi | pt) * dfull + (pj | pt)];
            }
            rho[i * dk + j] = s;
        }
    }
    return DensityMatrix(k, std::move(rho));
}

// --- qubit permutation -------------------------------------------------------

/**
 * @brief Relabel qubits: input qubit q becomes output qubit perm[q-1].
 *
 * `perm` must be a bijection on {1..m}. Applying perm then its inverse is
 * the exact identity.
 */
inline StateVector permute_qubits(const StateVector &psi, const std::vector<int> &perm) {
    const int m = psi.num_qubits;
    if (static_cast<int>(perm.size()) != m) {
        throw std::invalid_argument("permutation length does not match qubit count");
    }
    std::vector<bool> seen(m + 1, false);
    for (int p : perm) {
        if (p < 1 || p > m || seen[p]) throw std::invalid_argument("permutation is not a bijection");
        seen[p] = true;
    }
    std::vector<cplx> out(psi.dim());
    for (std::size_t idx = 0; idx < psi.dim(); ++idx) {
        std::size_t nidx = 0;
        for (int q = 1; q <= m; ++q) {
            const std::size_t bit = (idx >> (m - q)) & 1u;
            nidx |= bit << (m - perm[q - 1]);
        }
        out[nidx] = psi.amps[idx];
    }
    return StateVector(m, std::move(out));
}

inline std::vector<int> inverse_permutation(const std::vector<int> &perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

// --- density matrix functionals ----------------------------------------------

/// tr(rho^2); equals 1 exactly for rank-one (pure) states.
inline double purity(const DensityMatrix &rho) {
    const std::size_t d = rho.dim();
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) s += rho.at(i, j) * rho.at(j, i);
    return s.real();
}

inline double hermiticity_deviation(const DensityMatrix &rho) {
    double dev = 0.0;
    const std::size_t d = rho.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            dev = std::max(dev, std::abs(rho.at(i, j) - std::conj(rho.at(j, i))));
    return dev;
}

/// max_ij |rho_ij - (I/2^n)_ij|.
inline double deviation_from_maximally_mixed(const DensityMatrix &rho) {
    const std::size_t d = rho.dim();
    const double inv = 1.0 / static_cast<double>(d);
    double dev = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const cplx expect = (i == j) ? cplx{inv, 0.0} : cplx{0.0, 0.0};
            dev = std::max(dev, std::abs(rho.at(i, j) - expect));
        }
    return dev;
}

/// Largest absolute elementwise difference between two states of equal size.
inline double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("state size mismatch");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) dev = std::max(dev, std::abs(a.amps[i] - b.amps[i]));
    return dev;
}

} // namespace telecluster
