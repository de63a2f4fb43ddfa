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
 * The full verification suite: one numbered check per structural claim the
 * library exists to reproduce, each with its tolerance pinned here. Used by
 * the standalone acceptance runner and the `verify` CLI command.
 */

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "telecluster/analysis.hpp"
#include "telecluster/bases.hpp"
#include "telecluster/measurement.hpp"
#include "telecluster/protocols.hpp"
#include "telecluster/qcore.hpp"
#include "telecluster/resource.hpp"
#include "telecluster/rng.hpp"

namespace telecluster {

struct VerifyOptions {
    int n_max = 3;          // largest systematically swept payload size
    std::string only;       // run only criteria whose name contains this
    std::uint64_t seed = 20260810;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;

    CriterionResult() = default;
    CriterionResult(int criterion_id, std::string criterion_name)
        : id(criterion_id), name(std::move(criterion_name)) {}
};

namespace detail {

inline ResourceState random_resource_pair(int n, std::mt19937_64 &gen) {
    return build_resource(build_basis_a(random_schedule(n, gen)),
                          build_basis_b(random_schedule(n, gen)));
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

// 0.999 quantile of the chi-square distribution with 15 degrees of freedom
inline constexpr double chi2_crit_df15_p999 = 37.697298;

} // namespace detail

/// 1. Exhaustive teleportation is perfect and uniform: fidelity >= 1 - 1e-10
/// and |p - 4^-n| <= 1e-10 over every outcome, 20 random (schedule, state)
/// draws for each n up to 3, plus one n=4 case.
inline CriterionResult verify_teleportation(const VerifyOptions &opt) {
    CriterionResult res{1, "teleportation-perfect-uniform"};
    std::mt19937_64 gen(opt.seed + 1);
    double worst_fid = 1.0;
    double worst_p = 0.0;
    std::size_t outcomes = 0;
    for (int n = 1; n <= std::min(3, opt.n_max); ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto r = detail::random_resource_pair(n, gen);
            const auto phi = random_state(n, gen);
            const double uniform = std::pow(0.25, n);
            for (const auto &rec : teleport_exhaustive(phi, r)) {
                worst_fid = std::min(worst_fid, rec.fidelity);
                worst_p = std::max(worst_p, std::abs(rec.probability - uniform));
                ++outcomes;
            }
        }
    }
    if (opt.n_max >= 3) { // n=4 smoke case
        const auto r = detail::random_resource_pair(4, gen);
        const auto phi = random_state(4, gen);
        for (const auto &rec : teleport_exhaustive(phi, r)) {
            worst_fid = std::min(worst_fid, rec.fidelity);
            worst_p = std::max(worst_p, std::abs(rec.probability - std::pow(0.25, 4)));
            ++outcomes;
        }
    }
    res.passed = (1.0 - worst_fid) <= protocol_tol && worst_p <= protocol_tol;
    res.detail = "outcomes=" + std::to_string(outcomes) +
                 " worst 1-fidelity=" + detail::fmt(1.0 - worst_fid) +
                 " worst |p-4^-n|=" + detail::fmt(worst_p);
    return res;
}

/// 2. The joint-state decomposition identity: residual norm <= 1e-10 over
/// 20 random (schedule, state) pairs per n up to 3.
inline CriterionResult verify_decomposition_identity(const VerifyOptions &opt) {
    CriterionResult res{2, "decomposition-identity"};
    std::mt19937_64 gen(opt.seed + 2);
    double worst = 0.0;
    for (int n = 1; n <= std::min(3, opt.n_max); ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto r = detail::random_resource_pair(n, gen);
            worst = std::max(worst, verify_decomposition(random_state(n, gen), r));
        }
    }
    res.passed = worst <= protocol_tol;
    res.detail = "worst residual=" + detail::fmt(worst);
    return res;
}

/// 3. The transfer-operator identity: deviation from 2^-n I <= 1e-12 over
/// 20 random schedules per n up to 3.
inline CriterionResult verify_transfer_operator(const VerifyOptions &opt) {
    CriterionResult res{3, "transfer-operator"};
    std::mt19937_64 gen(opt.seed + 3);
    double worst = 0.0;
    for (int n = 1; n <= std::min(3, opt.n_max); ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            worst = std::max(worst, transfer_operator_check(detail::random_resource_pair(n, gen)));
        }
    }
    res.passed = worst <= structural_tol;
    res.detail = "worst deviation=" + detail::fmt(worst);
    return res;
}

/// 4. Cluster reduction: the constrained schedule hits the six-qubit cluster
/// reference amplitude-wise within 1e-12 for 20 random angle triples.
inline CriterionResult verify_cluster_reduction(const VerifyOptions &opt) {
    CriterionResult res{4, "cluster-reduction"};
    if (opt.n_max < 3) {
        res.skipped = true;
        res.detail = "needs n=3";
        return res;
    }
    std::mt19937_64 gen(opt.seed + 4);
    const auto reference = cluster6_reference();
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto [sa, sb] =
            cluster6_schedule(uniform_in(gen, 0.0, std::numbers::pi / 2),
                              uniform_in(gen, 0.0, std::numbers::pi / 2),
                              uniform_in(gen, 0.0, std::numbers::pi / 2));
        const auto r = build_resource(build_basis_a(sa), build_basis_b(sb));
        worst = std::max(worst, max_abs_diff(r.state, reference));
    }
    res.passed = worst <= structural_tol;
    res.detail = "worst amplitude diff=" + detail::fmt(worst);
    return res;
}

/// 5. Reduced-matrix block: the closed form matches the partial-trace route
/// entrywise within 1e-12 over 100 random n=3 schedules; purity at the
/// cluster point is 3/8 to 1e-12; 100 random schedules all have purity
/// < 1 - 1e-6 on the last pair.
inline CriterionResult verify_reduced_block(const VerifyOptions &opt) {
    CriterionResult res{5, "reduced-block-closed-form"};
    if (opt.n_max < 3) {
        res.skipped = true;
        res.detail = "needs n=3";
        return res;
    }
    std::mt19937_64 gen(opt.seed + 5);
    double worst_entry = 0.0;
    double max_purity = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto sa = random_schedule(3, gen);
        const auto sb = random_schedule(3, gen);
        const auto r = build_resource(build_basis_a(sa), build_basis_b(sb));
        const auto rho = reduced_last_pair(r);
        const auto block = closed_form_block(sa.last_level(), sb.last_level());
        worst_entry = std::max(worst_entry, std::abs(rho.at(0, 0) - cplx{block.diagonal, 0.0}));
        worst_entry = std::max(worst_entry, std::abs(rho.at(0, 3) - cplx{block.off_diagonal, 0.0}));
        worst_entry = std::max(worst_entry, std::abs(rho.at(3, 3) - cplx{block.diagonal, 0.0}));
        worst_entry = std::max(worst_entry, std::abs(rho.at(3, 0) - cplx{block.off_diagonal, 0.0}));
        max_purity = std::max(max_purity, purity(rho));
    }
    const auto [sa, sb] = cluster6_schedule(uniform_in(gen, 0.0, 1.5), uniform_in(gen, 0.0, 1.5),
                                            uniform_in(gen, 0.0, 1.5));
    const double cluster_purity =
        purity(reduced_last_pair(build_resource(build_basis_a(sa), build_basis_b(sb))));
    const double purity_err = std::abs(cluster_purity - 3.0 / 8.0);
    res.passed = worst_entry <= structural_tol && purity_err <= structural_tol &&
                 max_purity < 1.0 - 1e-6;
    res.detail = "worst block entry diff=" + detail::fmt(worst_entry) +
                 " |purity-3/8|=" + detail::fmt(purity_err) +
                 " max random purity=" + detail::fmt(max_purity);
    return res;
}

/// 6. Dense coding: all 4^n messages round-trip exactly, Gram off-diagonals
/// <= 1e-10, every codeword's A marginal within 1e-12 of I/2^n, for n up to 3.
inline CriterionResult verify_dense_coding(const VerifyOptions &opt) {
    CriterionResult res{6, "dense-coding"};
    std::mt19937_64 gen(opt.seed + 6);
    std::size_t failures = 0;
    std::size_t messages = 0;
    double worst_gram = 0.0;
    double worst_marginal = 0.0;
    for (int n = 1; n <= std::min(3, opt.n_max); ++n) {
        const auto r = detail::random_resource_pair(n, gen);
        const std::size_t count = detail::pow2(2 * n);
        for (std::size_t idx = 0; idx < count; ++idx) {
            const auto message = PauliLabels::from_index(n, idx);
            const auto rec = dense_roundtrip(r, message);
            ++messages;
            if (!rec.decoded || !(*rec.decoded == message)) ++failures;
        }
        const auto gram = dense_gram_check(r);
        worst_gram = std::max(worst_gram, gram.max_off_diagonal);
        worst_marginal = std::max(worst_marginal, gram.max_marginal_deviation);
    }
    res.passed = failures == 0 && worst_gram <= protocol_tol && worst_marginal <= structural_tol;
    res.detail = "round-trips=" + std::to_string(messages - failures) + "/" +
                 std::to_string(messages) + " worst gram=" + detail::fmt(worst_gram) +
                 " worst marginal=" + detail::fmt(worst_marginal);
    return res;
}

/// 7. Bell-product baseline: the computational-basis resource equals the
/// Bell-pair product with fidelity >= 1 - 1e-12 for n up to 3.
inline CriterionResult verify_bell_baseline(const VerifyOptions &opt) {
    CriterionResult res{7, "bell-baseline"};
    double worst = 0.0;
    for (int n = 1; n <= std::min(3, opt.n_max); ++n) {
        const auto r = build_resource(computational_basis(n), computational_basis(n));
        worst = std::max(worst, 1.0 - fidelity_pure(r.state, bell_product_reference(n)));
    }
    res.passed = worst <= structural_tol;
    res.detail = "worst 1-fidelity=" + detail::fmt(worst);
    return res;
}

/// 8. n=2 cluster special case: the pi/8 grid search over last-level angles
/// and qubit permutations reaches match fidelity >= 1 - 1e-6.
inline CriterionResult verify_cluster_search(const VerifyOptions &opt) {
    CriterionResult res{8, "cluster-search-n2"};
    if (opt.n_max < 2) {
        res.skipped = true;
        res.detail = "needs n=2";
        return res;
    }
    const auto perms = all_qubit_permutations(4);
    const auto result = search_cluster_angles_n2(std::numbers::pi / 8, perms);
    res.passed = result.report.matched && result.report.fidelity >= 1.0 - cluster_match_tol;
    std::ostringstream angles;
    angles.precision(4);
    for (double a : result.schedule_a.last_level()) angles << a << ",";
    for (double b : result.schedule_b.last_level()) angles << b << ",";
    res.detail = "best fidelity=" + detail::fmt(result.report.fidelity) +
                 " angles=" + angles.str();
    return res;
}

/// 9. Sampler soundness: 40000 seeded draws on a uniform 16-outcome case
/// pass a chi-square test at significance 1e-3.
inline CriterionResult verify_sampler(const VerifyOptions &opt) {
    CriterionResult res{9, "sampler-chi-square"};
    if (opt.n_max < 2) {
        res.skipped = true;
        res.detail = "needs n=2";
        return res;
    }
    std::mt19937_64 gen(opt.seed + 9);
    const int n = 2;
    const auto r = detail::random_resource_pair(n, gen);
    const auto basis = build_pi_basis(r.basis_a, r.basis_b);
    const auto joint = kron(random_state(n, gen), r.state);

    const int draws = 40000;
    std::vector<int> counts(16, 0);
    for (int i = 0; i < draws; ++i) {
        ++counts[sample_outcome(joint, basis, opt.seed + 1000 + static_cast<std::uint64_t>(i))
                     .index()];
    }
    const double expected = draws / 16.0;
    double chi2 = 0.0;
    for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
    res.passed = chi2 < detail::chi2_crit_df15_p999;
    res.detail = "chi2=" + detail::fmt(chi2) + " crit(df=15,p=0.999)=" +
                 detail::fmt(detail::chi2_crit_df15_p999);
    return res;
}

/// Run the requested criteria, in order, timing each. A nonempty `only`
/// restricts the run to criteria whose name contains it.
inline std::vector<CriterionResult> run_acceptance_suite(const VerifyOptions &opt) {
    struct Entry {
        const char *name;
        CriterionResult (*run)(const VerifyOptions &);
    };
    const Entry entries[] = {
        {"teleportation-perfect-uniform", verify_teleportation},
        {"decomposition-identity", verify_decomposition_identity},
        {"transfer-operator", verify_transfer_operator},
        {"cluster-reduction", verify_cluster_reduction},
        {"reduced-block-closed-form", verify_reduced_block},
        {"dense-coding", verify_dense_coding},
        {"bell-baseline", verify_bell_baseline},
        {"cluster-search-n2", verify_cluster_search},
        {"sampler-chi-square", verify_sampler},
    };
    std::vector<CriterionResult> results;
    for (const Entry &entry : entries) {
        if (!opt.only.empty() && std::string(entry.name).find(opt.only) == std::string::npos) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        CriterionResult r = entry.run(opt);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(r));
    }
    return results;
}

/// Runtime bounds pinned for the two timed criteria.
inline bool within_runtime_bounds(const CriterionResult &r) {
    if (r.id == 1) return r.seconds < 60.0;
    if (r.id == 8) return r.seconds < 30.0;
    return true;
}

} // namespace telecluster
