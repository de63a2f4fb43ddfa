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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "telecluster/bases.hpp"

using namespace telecluster;

namespace {
constexpr double pi = std::numbers::pi;

// evaluate <e_idx | v> for a plain amplitude lookup
cplx amp_at(const StateVector &v, std::size_t idx) { return v.amps[idx]; }
} // namespace

TEST_CASE("AngleSchedule validates its level structure") {
    REQUIRE_NOTHROW(AngleSchedule(2, {{0.1}, {0.2, 0.3}}));
    REQUIRE_THROWS_AS(AngleSchedule(2, {{0.1}, {0.2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(AngleSchedule(2, {{0.1, 0.2}, {0.2, 0.3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(AngleSchedule(1, {{std::nan("")}}), std::invalid_argument);
    REQUIRE_THROWS_AS(AngleSchedule::from_last_level({0.1, 0.2, 0.3}), std::invalid_argument);
}

TEST_CASE("single-qubit A basis at pinned angles") {
    const auto zero = build_basis_a(AngleSchedule(1, {{0.0}}));
    REQUIRE(amp_at(zero.vectors[0], 0) == cplx{1.0, 0.0});
    REQUIRE(amp_at(zero.vectors[1], 1) == cplx{1.0, 0.0});
    REQUIRE(amp_at(zero.vectors[1], 0) == cplx{0.0, 0.0});

    const auto quarter = build_basis_a(AngleSchedule(1, {{pi / 4}}));
    const double s = 1.0 / std::sqrt(2.0);
    REQUIRE(amp_at(quarter.vectors[0], 0).real() == Catch::Approx(s));
    REQUIRE(amp_at(quarter.vectors[0], 1).real() == Catch::Approx(s));
    REQUIRE(amp_at(quarter.vectors[1], 0).real() == Catch::Approx(-s));
    REQUIRE(amp_at(quarter.vectors[1], 1).real() == Catch::Approx(s));
}

TEST_CASE("A basis at all-zero angles carries the pair-1 sign on vector 3") {
    const auto basis = build_basis_a(AngleSchedule::zeros(3));
    REQUIRE(amp_at(basis.vectors[3], 0b011).real() == Catch::Approx(-1.0));
    for (std::size_t idx = 0; idx < 8; ++idx) {
        if (idx != 0b011) REQUIRE(std::abs(amp_at(basis.vectors[3], idx)) == 0.0);
    }
    // every other vector is the plain computational vector
    for (std::size_t k = 0; k < 8; ++k) {
        if (k == 3) continue;
        REQUIRE(amp_at(basis.vectors[k], k) == cplx{1.0, 0.0});
    }
}

TEST_CASE("uniform_signs removes the exceptional pair") {
    const auto sched = AngleSchedule(2, {{0.3}, {0.7, 1.1}});
    const auto uniform = build_basis_a(sched, true);
    const auto b_side = build_basis_b(sched);
    for (std::size_t k = 0; k < 4; ++k) {
        REQUIRE(max_abs_diff(uniform.vectors[k], b_side.vectors[k]) == 0.0);
    }
    // the faithful A side differs from the uniform one exactly in vector 3
    const auto faithful = build_basis_a(sched);
    for (std::size_t k = 0; k < 3; ++k) {
        REQUIRE(max_abs_diff(faithful.vectors[k], uniform.vectors[k]) == 0.0);
    }
    StateVector negated = uniform.vectors[3];
    for (cplx &a : negated.amps) a = -a;
    REQUIRE(max_abs_diff(faithful.vectors[3], negated) == 0.0);
}

TEST_CASE("B basis at all-zero angles is the computational basis, exactly") {
    const auto basis = build_basis_b(AngleSchedule::zeros(3));
    const auto comp = computational_basis(3);
    for (std::size_t k = 0; k < 8; ++k) {
        REQUIRE(max_abs_diff(basis.vectors[k], comp.vectors[k]) == 0.0);
    }
}

TEST_CASE("B basis two-qubit example at (pi/2, pi/2)") {
    const auto basis = build_basis_b(AngleSchedule(2, {{0.0}, {pi / 2, pi / 2}}));
    REQUIRE(amp_at(basis.vectors[0], 0b01).real() == Catch::Approx(1.0));
    REQUIRE(amp_at(basis.vectors[1], 0b00).real() == Catch::Approx(-1.0));
}

TEST_CASE("both families are orthonormal for random schedules") {
    std::mt19937_64 gen(5);
    for (int n : {1, 2, 3, 4}) {
        for (int trial = 0; trial < 5; ++trial) {
            // include angles outside [0, pi/2]; orthonormality must survive
            const auto sa = random_schedule(n, gen, -pi, pi);
            const auto sb = random_schedule(n, gen, -pi, pi);
            REQUIRE(gram_deviation(build_basis_a(sa)) <= 1e-12);
            REQUIRE(gram_deviation(build_basis_b(sb)) <= 1e-12);
        }
    }
}

TEST_CASE("contracting the attached qubit of even vectors recovers the prefixes") {
    std::mt19937_64 gen(31);
    for (int n : {2, 3}) {
        const auto sched = random_schedule(n, gen);
        AngleSchedule truncated(n - 1, std::vector<std::vector<double>>(
                                           sched.levels.begin(), sched.levels.end() - 1));
        for (BasisSide side : {BasisSide::A, BasisSide::B}) {
            const auto basis = (side == BasisSide::A) ? build_basis_a(sched) : build_basis_b(sched);
            // prefix levels follow the uniform rule on both sides
            const auto prefixes = build_basis_b(truncated);
            const auto &last = sched.last_level();
            for (std::size_t p = 0; p < prefixes.vectors.size(); ++p) {
                const double c = std::cos(last[p]);
                const double s = std::sin(last[p]);
                const auto &even = basis.vectors[2 * p];
                std::vector<cplx> contracted(even.dim() / 2);
                for (std::size_t i = 0; i < contracted.size(); ++i) {
                    contracted[i] = even.amps[2 * i] * c + even.amps[2 * i + 1] * s;
                }
                const StateVector recovered(n - 1, std::move(contracted));
                REQUIRE(max_abs_diff(recovered, prefixes.vectors[p]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("computational basis") {
    const auto basis = computational_basis(2);
    REQUIRE(amp_at(basis.vectors[2], 0b10) == cplx{1.0, 0.0});
    REQUIRE(gram_deviation(basis) == 0.0);

    const auto single = computational_basis(1);
    REQUIRE(amp_at(single.vectors[0], 0) == cplx{1.0, 0.0});
    REQUIRE(amp_at(single.vectors[1], 1) == cplx{1.0, 0.0});
}

TEST_CASE("basis_from_columns accepts unitaries and rejects the rest") {
    const auto id_basis = basis_from_columns(Operator::identity(4));
    const auto comp = computational_basis(2);
    for (std::size_t k = 0; k < 4; ++k) {
        REQUIRE(max_abs_diff(id_basis.vectors[k], comp.vectors[k]) == 0.0);
    }

    const double s = 1.0 / std::sqrt(2.0);
    const auto hadamard = basis_from_columns(Operator(2, {s, s, s, -s}));
    REQUIRE(amp_at(hadamard.vectors[0], 0).real() == Catch::Approx(s));
    REQUIRE(amp_at(hadamard.vectors[0], 1).real() == Catch::Approx(s));
    REQUIRE(amp_at(hadamard.vectors[1], 1).real() == Catch::Approx(-s));

    try {
        basis_from_columns(Operator(2, {1.0, 0.0, 0.5, 1.0}));
        FAIL("expected rejection of a non-unitary matrix");
    } catch (const std::invalid_argument &e) {
        REQUIRE(std::string(e.what()).find("not unitary") != std::string::npos);
    }

    std::mt19937_64 gen(37);
    const auto u = oracle::random_unitary(8, gen);
    REQUIRE(gram_deviation(basis_from_columns(u)) <= 1e-12);
}

TEST_CASE("coefficients_in_basis reconstructs and respects Parseval") {
    std::mt19937_64 gen(41);
    const auto sched = random_schedule(3, gen);
    const auto basis = build_basis_a(sched);

    const auto e5 = coefficients_in_basis(basis.vectors[5], basis);
    for (std::size_t k = 0; k < 8; ++k) {
        const double expect = (k == 5) ? 1.0 : 0.0;
        REQUIRE(std::abs(e5[k] - cplx{expect, 0.0}) <= 1e-13);
    }

    const auto e0 = coefficients_in_basis(StateVector::computational(3, 0), computational_basis(3));
    REQUIRE(e0[0] == cplx{1.0, 0.0});

    const auto psi = random_state(3, gen);
    const auto coeffs = coefficients_in_basis(psi, basis);
    double total = 0.0;
    std::vector<cplx> rebuilt(8, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < 8; ++k) {
        total += std::norm(coeffs[k]);
        for (std::size_t i = 0; i < 8; ++i) rebuilt[i] += coeffs[k] * basis.vectors[k].amps[i];
    }
    REQUIRE(total == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(max_abs_diff(StateVector(3, rebuilt), psi) <= 1e-12);

    REQUIRE_THROWS_AS(coefficients_in_basis(StateVector::computational(2, 0), basis),
                      std::invalid_argument);
}
