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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "telecluster/qcore.hpp"
#include "telecluster/rng.hpp"

using namespace telecluster;

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

StateVector bell_pair() { return StateVector(2, {inv_sqrt2, 0.0, 0.0, inv_sqrt2}); }
} // namespace

TEST_CASE("kron of basis states follows the bit-ordering convention") {
    const auto k0 = StateVector::computational(1, 0);
    const auto k1 = StateVector::computational(1, 1);

    const auto k01 = kron(k0, k1);
    REQUIRE(k01.num_qubits == 2);
    REQUIRE(k01.amps[0b01] == cplx{1.0, 0.0});
    REQUIRE(k01.amps[0b00] == cplx{0.0, 0.0});

    const auto bell0 = kron(bell_pair(), k0);
    REQUIRE(bell0.amps[0b000].real() == Catch::Approx(inv_sqrt2));
    REQUIRE(bell0.amps[0b110].real() == Catch::Approx(inv_sqrt2));
    REQUIRE(std::abs(bell0.amps[0b011]) == 0.0);
}

TEST_CASE("kron of identity operators is the identity") {
    const auto id4 = kron(Operator::identity(2), Operator::identity(2));
    REQUIRE(deviation_from_identity(id4) == 0.0);
}

TEST_CASE("kron is associative") {
    // bit-exact on basis states, where every product is exact
    const auto e0 = StateVector::computational(1, 0);
    const auto e10 = StateVector::computational(2, 2);
    const auto e1 = StateVector::computational(1, 1);
    REQUIRE(max_abs_diff(kron(kron(e0, e10), e1), kron(e0, kron(e10, e1))) == 0.0);

    // within one rounding step of exact for generic complex amplitudes
    std::mt19937_64 gen(11);
    const auto a = random_state(1, gen);
    const auto b = random_state(2, gen);
    const auto c = random_state(1, gen);
    const auto left = kron(kron(a, b), c);
    const auto right = kron(a, kron(b, c));
    REQUIRE(max_abs_diff(left, right) <= 1e-15);
}

TEST_CASE("pauli operators") {
    REQUIRE(deviation_from_identity(pauli(0)) == 0.0);

    const auto flipped = apply_on_subsystems(pauli(1), {1}, StateVector::computational(1, 0));
    REQUIRE(flipped.amps[1] == cplx{1.0, 0.0});

    for (int label : {1, 2, 3}) {
        REQUIRE(deviation_from_identity(matmul(pauli(label), pauli(label))) == 0.0);
    }
    REQUIRE_THROWS_AS(pauli(4), std::invalid_argument);
    REQUIRE_THROWS_AS(pauli(-1), std::invalid_argument);
}

TEST_CASE("pauli strings are trace-orthogonal") {
    const int n = 2;
    for (std::size_t a = 0; a < 16; ++a) {
        for (std::size_t b = 0; b < 16; ++b) {
            std::vector<int> la(n), lb(n);
            for (int j = 0; j < n; ++j) {
                la[j] = static_cast<int>((a >> (2 * (n - 1 - j))) & 3);
                lb[j] = static_cast<int>((b >> (2 * (n - 1 - j))) & 3);
            }
            const cplx t = trace(matmul(adjoint(pauli_string(la)), pauli_string(lb)));
            const double expect = (a == b) ? 4.0 : 0.0;
            REQUIRE(std::abs(t - cplx{expect, 0.0}) <= 1e-12);
        }
    }
}

TEST_CASE("apply_on_subsystems acts on the named qubits only") {
    const auto s00 = StateVector::computational(2, 0b00);
    const auto hit = apply_on_subsystems(pauli(1), {2}, s00);
    REQUIRE(hit.amps[0b01] == cplx{1.0, 0.0});

    const auto same = apply_on_subsystems(Operator::identity(4), {1, 2}, bell_pair());
    REQUIRE(max_abs_diff(same, bell_pair()) == 0.0);

    const auto xx = apply_on_subsystems(kron(pauli(1), pauli(1)), {1, 2}, bell_pair());
    REQUIRE(max_abs_diff(xx, bell_pair()) <= 1e-15);
}

TEST_CASE("apply_on_subsystems rejects malformed targets") {
    const auto s = StateVector::computational(2, 0);
    REQUIRE_THROWS_AS(apply_on_subsystems(pauli(1), {1, 2}, s), std::invalid_argument);
    REQUIRE_THROWS_AS(apply_on_subsystems(kron(pauli(1), pauli(1)), {1, 1}, s),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(apply_on_subsystems(pauli(1), {3}, s), std::invalid_argument);
}

TEST_CASE("unitaries preserve the norm of random states") {
    std::mt19937_64 gen(42);
    for (int m : {2, 3, 4}) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto state = random_state(m, gen);
            const auto u = oracle::random_unitary(4, gen);
            const auto moved = apply_on_subsystems(u, {1, m}, state);
            REQUIRE(std::abs(moved.squared_norm() - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("inner products") {
    const auto k0 = StateVector::computational(1, 0);
    const auto k1 = StateVector::computational(1, 1);
    const StateVector plus(1, {inv_sqrt2, inv_sqrt2});

    REQUIRE(inner(k0, k0) == cplx{1.0, 0.0});
    REQUIRE(inner(k0, k1) == cplx{0.0, 0.0});
    REQUIRE(inner(plus, k0).real() == Catch::Approx(inv_sqrt2));

    // conjugate linearity in the first argument
    const StateVector ik0(1, {cplx{0.0, 1.0}, 0.0});
    REQUIRE(std::abs(inner(ik0, k0) - cplx{0.0, -1.0}) <= 1e-15);

    REQUIRE_THROWS_AS(inner(k0, bell_pair()), std::invalid_argument);
}

TEST_CASE("partial trace of basis and Bell states") {
    const auto rho0 = partial_trace(StateVector::computational(2, 0b00), {1});
    REQUIRE(std::abs(rho0.at(0, 0) - cplx{1.0, 0.0}) <= 1e-15);
    REQUIRE(std::abs(rho0.at(1, 1)) <= 1e-15);

    const auto rho_bell = partial_trace(bell_pair(), {1});
    REQUIRE(deviation_from_maximally_mixed(rho_bell) <= 1e-15);

    REQUIRE_THROWS_AS(partial_trace(bell_pair(), {}), std::invalid_argument);
}

TEST_CASE("partial trace of the constrained six-qubit state has purity 3/8") {
    const auto xi = oracle::frozen_cluster6();
    const auto rho = partial_trace(xi, {3, 6});
    REQUIRE(std::abs(rho.trace() - cplx{1.0, 0.0}) <= 1e-12);
    REQUIRE(purity(rho) == Catch::Approx(3.0 / 8.0).margin(1e-12));

    // cross-check against the brute-force oracle, entry by entry
    const auto rho_oracle = oracle::naive_partial_trace(xi, {3, 6});
    for (std::size_t i = 0; i < rho.dim(); ++i)
        for (std::size_t j = 0; j < rho.dim(); ++j)
            REQUIRE(std::abs(rho.at(i, j) - rho_oracle.at(i, j)) <= 1e-14);
}

TEST_CASE("partial trace agrees with the oracle on random states") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 4; ++trial) {
        const auto psi = random_state(4, gen);
        for (const auto &keep : {std::vector<int>{2}, {1, 3}, {2, 4}, {1, 2, 4}}) {
            const auto fast = partial_trace(psi, keep);
            const auto slow = oracle::naive_partial_trace(psi, keep);
            for (std::size_t i = 0; i < fast.dim(); ++i)
                for (std::size_t j = 0; j < fast.dim(); ++j)
                    REQUIRE(std::abs(fast.at(i, j) - slow.at(i, j)) <= 1e-13);
        }
    }
}

TEST_CASE("tracing a density matrix further agrees with tracing the state once") {
    std::mt19937_64 gen(83);
    const auto psi = random_state(4, gen);
    const auto two_step = partial_trace(partial_trace(psi, {1, 2, 4}), {1, 3});
    const auto one_step = partial_trace(psi, {1, 4});
    for (std::size_t i = 0; i < one_step.dim(); ++i)
        for (std::size_t j = 0; j < one_step.dim(); ++j)
            REQUIRE(std::abs(two_step.at(i, j) - one_step.at(i, j)) <= 1e-13);

    REQUIRE_THROWS_AS(partial_trace(one_step, {}), std::invalid_argument);
}

TEST_CASE("reduced states of pure inputs are trace-one Hermitian PSD") {
    std::mt19937_64 gen(13);
    for (int trial = 0; trial < 5; ++trial) {
        const auto psi = random_state(5, gen);
        const auto rho = partial_trace(psi, {1, 4});
        REQUIRE(std::abs(rho.trace() - cplx{1.0, 0.0}) <= 1e-12);
        REQUIRE(hermiticity_deviation(rho) == 0.0);
        for (double ev : oracle::spectrum(rho)) REQUIRE(ev >= -1e-10);
    }
}

TEST_CASE("reduced state of a pure product input stays pure") {
    std::mt19937_64 gen(17);
    const auto left = random_state(2, gen);
    const auto right = random_state(2, gen);
    const auto rho = partial_trace(kron(left, right), {3, 4});
    REQUIRE(purity(rho) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("qubit permutations") {
    const auto s01 = StateVector::computational(2, 0b01);
    REQUIRE(max_abs_diff(permute_qubits(s01, {1, 2}), s01) == 0.0);

    const auto swapped = permute_qubits(s01, {2, 1});
    REQUIRE(swapped.amps[0b10] == cplx{1.0, 0.0});

    std::mt19937_64 gen(23);
    const auto psi = random_state(4, gen);
    const std::vector<int> perm{3, 1, 4, 2};
    const auto back = permute_qubits(permute_qubits(psi, perm), inverse_permutation(perm));
    REQUIRE(max_abs_diff(back, psi) == 0.0);

    REQUIRE_THROWS_AS(permute_qubits(psi, {1, 1, 2, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(permute_qubits(psi, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("pure-state fidelity") {
    std::mt19937_64 gen(29);
    const auto psi = random_state(3, gen);
    REQUIRE(fidelity_pure(psi, psi) == Catch::Approx(1.0).margin(1e-14));

    const auto k0 = StateVector::computational(1, 0);
    const auto k1 = StateVector::computational(1, 1);
    REQUIRE(fidelity_pure(k0, k1) == 0.0);

    const cplx phase = std::polar(1.0, 0.9);
    StateVector rotated = psi;
    for (cplx &a : rotated.amps) a *= phase;
    REQUIRE(fidelity_pure(psi, rotated) == Catch::Approx(1.0).margin(1e-14));

    REQUIRE_THROWS_AS(fidelity_pure(k0, bell_pair()), std::invalid_argument);
    REQUIRE_THROWS_AS(fidelity_pure(k0, StateVector(1, {0.5, 0.0})), std::invalid_argument);
}

TEST_CASE("purity of pure and maximally mixed states") {
    const auto pure = partial_trace(StateVector::computational(2, 0b10), {1, 2});
    REQUIRE(purity(pure) == Catch::Approx(1.0).margin(1e-14));

    const DensityMatrix half(1, {0.5, 0.0, 0.0, 0.5});
    REQUIRE(purity(half) == Catch::Approx(0.5).margin(1e-15));
}

TEST_CASE("StateVector validates its shape") {
    REQUIRE_THROWS_AS(StateVector(2, {1.0, 0.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector(0, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector::computational(2, 4), std::invalid_argument);
}
