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
 * Structural equivalence tooling: the Bell-product purity witness, state
 * matching up to qubit permutation and global phase, and the n=2 grid
 * search for cluster-state angle schedules.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "telecluster/bases.hpp"
#include "telecluster/qcore.hpp"
#include "telecluster/resource.hpp"

namespace telecluster {

/// Match fidelity the n=2 cluster search must reach to declare success.
inline constexpr double cluster_match_tol = 1e-6;

// --- Bell-product witness --------------------------------------------------

/// Purity below 1 - 1e-8 certifies the resource is not a product of Bell
/// pairs across the (A_i, B_i) pairing; purity 1 proves nothing.
enum class BellProductVerdict { NotBellProduct, Inconclusive };

struct BellProductWitness {
    double purity = 0.0; // of the reduced last-pair state
    BellProductVerdict verdict = BellProductVerdict::Inconclusive;
};

inline BellProductWitness bell_product_witness(const ResourceState &r) {
    BellProductWitness w;
    w.purity = purity(reduced_last_pair(r));
    w.verdict = (w.purity < 1.0 - 1e-8) ? BellProductVerdict::NotBellProduct
                                        : BellProductVerdict::Inconclusive;
    return w;
}

// --- phase/permutation matching ---------------------------------------------

/**
 * @brief Outcome of matching a candidate state against a reference over a
 * permutation set. On a match, permute_qubits(candidate, permutation) is
 * phase * reference up to the threshold.
 */
struct MatchReport {
    bool matched = false;
    std::vector<int> permutation;
    cplx phase{1.0, 0.0};
    double fidelity = 0.0;
};

inline MatchReport match_up_to_phase_perm(const StateVector &candidate,
                                          const StateVector &reference,
                                          std::span<const std::vector<int>> perms,
                                          double threshold) {
    if (candidate.num_qubits != reference.num_qubits) {
        throw std::invalid_argument("candidate and reference sizes differ");
    }
    if (perms.empty()) throw std::invalid_argument("permutation set must be nonempty");
    MatchReport best;
    best.fidelity = -1.0;
    for (const auto &perm : perms) {
        const StateVector permuted = permute_qubits(candidate, perm);
        const cplx overlap = inner(reference, permuted);
        const double fid = std::norm(overlap);
        if (fid > best.fidelity) {
            best.fidelity = fid;
            best.permutation = perm;
            best.phase = (std::abs(overlap) > 0.0) ? overlap / std::abs(overlap) : cplx{1.0, 0.0};
        }
    }
    best.matched = best.fidelity >= threshold;
    return best;
}

/// All m! qubit permutations in lexicographic order.
inline std::vector<std::vector<int>> all_qubit_permutations(int m) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// --- n=2 cluster search -------------------------------------------------------

/// The four-qubit cluster state (|0000> + |0011> + |1100> - |1111>)/2.
inline StateVector cluster4_reference() {
    std::vector<cplx> amps(16, cplx{0.0, 0.0});
    amps[0b0000] = 0.5;
    amps[0b0011] = 0.5;
    amps[0b1100] = 0.5;
    amps[0b1111] = -0.5;
    return StateVector(4, std::move(amps));
}

struct ClusterSearchResult {
    AngleSchedule schedule_a;
    AngleSchedule schedule_b;
    MatchReport report;
};

/**
 * @brief Grid search over n=2 last-level angle pairs (zero prefix level)
 * for a resource matching the four-qubit cluster state over the supplied
 * qubit permutations.
 *
 * The grid covers [0, 2pi) per angle in lexicographic (a1, a2, b1, b2)
 * order; ties are broken toward the first (lexicographically smallest)
 * maximizer, so identical inputs always return the identical schedule.
 */
inline ClusterSearchResult search_cluster_angles_n2(double grid_step,
                                                    std::span<const std::vector<int>> perms) {
    if (!(grid_step > 0.0)) throw std::invalid_argument("grid step must be positive");
    const StateVector reference = cluster4_reference();
    std::vector<double> grid;
    for (double v = 0.0; v < 2 * std::numbers::pi - 1e-12; v += grid_step) grid.push_back(v);

    ClusterSearchResult best;
    best.report.fidelity = -1.0;
    for (double a1 : grid)
        for (double a2 : grid)
            for (double b1 : grid)
                for (double b2 : grid) {
                    auto sa = AngleSchedule::from_last_level({a1, a2});
                    auto sb = AngleSchedule::from_last_level({b1, b2});
                    const ResourceState r = build_resource(build_basis_a(sa), build_basis_b(sb));
                    const MatchReport report =
                        match_up_to_phase_perm(r.state, reference, perms, 1.0 - cluster_match_tol);
                    if (report.fidelity > best.report.fidelity) {
                        best.report = report;
                        best.schedule_a = std::move(sa);
                        best.schedule_b = std::move(sb);
                    }
                }
    return best;
}

} // namespace telecluster
