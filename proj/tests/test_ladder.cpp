// Copyright 2026 The masersim developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "masersim/algebra_checks.hpp"
#include "masersim/ladder.hpp"
#include "test_helpers.hpp"

using namespace masersim::algebra;

namespace {
const LadderKind kAllKinds[] = {LadderKind::A, LadderKind::B, LadderKind::C, LadderKind::B0,
                                LadderKind::B1};
}

TEST_CASE("strength tables match the defining formulas") {
    const auto id = NonlinearityFn::identity();
    CHECK(ladder_strength(LadderKind::A, id, 5) == 5.0);
    CHECK(ladder_strength(LadderKind::C, id, 1) == 0.0);
    CHECK(ladder_strength(LadderKind::C, id, 4) == 12.0);
    CHECK(ladder_strength(LadderKind::B0, id, 4) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(ladder_strength(LadderKind::B1, id, 4) == doctest::Approx(3.0 / 16.0).epsilon(1e-15));

    const auto inv = NonlinearityFn::inverse_sqrt();
    CHECK(ladder_strength(LadderKind::A, inv, 7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ladder_strength(LadderKind::B, inv, 2) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("strengths vanish below the step for every kind and family") {
    for (const auto& f : test_helpers::family_set()) {
        for (LadderKind kind : kAllKinds) {
            for (int n = 0; n < step_of(kind); ++n) {
                CHECK(ladder_strength(kind, f, n) == 0.0);
            }
        }
    }
    CHECK_THROWS(ladder_strength(LadderKind::A, NonlinearityFn::identity(), -1));
}

TEST_CASE("lowering matrices carry sqrt strengths one step below the diagonal") {
    const auto id = NonlinearityFn::identity();

    const Eigen::MatrixXd a = ladder_matrix(LadderKind::A, id, 3);
    CHECK(a(0, 1) == doctest::Approx(std::sqrt(1.0)));
    CHECK(a(1, 2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(a(2, 3) == doctest::Approx(std::sqrt(3.0)));
    CHECK(a.cwiseAbs().sum() ==
          doctest::Approx(std::sqrt(1.0) + std::sqrt(2.0) + std::sqrt(3.0)));

    const Eigen::MatrixXd c = ladder_matrix(LadderKind::C, id, 4);
    CHECK(c(0, 2) == doctest::Approx(std::sqrt(2.0)));
    CHECK(c(1, 3) == doctest::Approx(std::sqrt(6.0)));
    CHECK(c(2, 4) == doctest::Approx(std::sqrt(12.0)));

    const Eigen::MatrixXd b = ladder_matrix(LadderKind::B, NonlinearityFn::inverse_sqrt(), 2);
    CHECK(b(0, 1) == doctest::Approx(1.0));
    CHECK(b(1, 2) == doctest::Approx(2.0));

    CHECK_THROWS(ladder_matrix(LadderKind::C, id, 1));
}

TEST_CASE("undeformed A and B reduce to the standard annihilation operator") {
    const auto id = NonlinearityFn::identity();
    const Eigen::MatrixXd a = ladder_matrix(LadderKind::A, id, 12);
    const Eigen::MatrixXd b = ladder_matrix(LadderKind::B, id, 12);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    for (int n = 1; n <= 12; ++n) {
        CHECK(a(n - 1, n) == doctest::Approx(std::sqrt(double(n))).epsilon(1e-15));
    }
}

TEST_CASE("deformed commutator identities hold on the interior block") {
    for (const auto& f : test_helpers::family_set()) {
        for (LadderKind kind : kAllKinds) {
            const DeformedLadder ladder(kind, f, 32);
            CHECK(self_commutator_deviation(ladder) <= 1e-12);
            CHECK(number_commutator_deviation(ladder) <= 1e-12);
        }
    }
}

TEST_CASE("conjugate pairs give [L, R+] = 1 on their sector") {
    for (const auto& f : test_helpers::family_set()) {
        CHECK(commutator_deviation(LadderKind::A, LadderKind::B, f, 16) <= 1e-12);
        CHECK(commutator_deviation(LadderKind::B, LadderKind::A, f, 16) <= 1e-12);
        CHECK(commutator_deviation(LadderKind::C, LadderKind::B0, f, 16) <= 1e-12);
        CHECK(commutator_deviation(LadderKind::C, LadderKind::B1, f, 16) <= 1e-12);
    }
}

TEST_CASE("duality survives at the minimal cutoff for step 2") {
    const auto f = NonlinearityFn::inverse_sqrt();
    CHECK(commutator_deviation(LadderKind::C, LadderKind::B0, f, 4) <= 1e-12);
    CHECK(commutator_deviation(LadderKind::C, LadderKind::B1, f, 4) <= 1e-12);
}

TEST_CASE("duality is an identity for arbitrary nonlinearities") {
    // random strictly-positive tables; the pairing cancels f pointwise
    std::mt19937 eng(7);
    auto uniform = [&eng] { return eng() / 4294967296.0; };
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> values;
        for (int n = 0; n <= 20; ++n) values.push_back(0.2 + 2.0 * uniform());
        const auto f = NonlinearityFn::table(values);
        CHECK(commutator_deviation(LadderKind::A, LadderKind::B, f, 16) <= 1e-12);
        CHECK(commutator_deviation(LadderKind::C, LadderKind::B0, f, 16) <= 1e-12);
        CHECK(commutator_deviation(LadderKind::C, LadderKind::B1, f, 16) <= 1e-12);
    }
}

TEST_CASE("incompatible steps and short cutoffs are rejected") {
    const auto f = NonlinearityFn::identity();
    const DeformedLadder a(LadderKind::A, f, 16);
    const DeformedLadder c(LadderKind::C, f, 16);
    CHECK_THROWS(commutator_deviation(a, c, Sector::All));

    const DeformedLadder short_c(LadderKind::C, f, 3);
    const DeformedLadder short_b0(LadderKind::B0, f, 3);
    CHECK_THROWS(commutator_deviation(short_c, short_b0, Sector::Even));
}

TEST_CASE("a perturbed strength table breaks the duality") {
    const auto f = NonlinearityFn::inverse_sqrt();
    DeformedLadder a(LadderKind::A, f, 16);
    const DeformedLadder b(LadderKind::B, f, 16);
    a.perturb_strength(8, 1e-6);
    CHECK(commutator_deviation(a, b, Sector::All) > 1e-8);
}

TEST_CASE("banded applications agree with the dense matrices") {
    const auto f = NonlinearityFn::power(-1.0);
    const DeformedLadder c(LadderKind::C, f, 14);
    const Eigen::VectorXcd v = test_helpers::random_state(14, 3);
    const Eigen::MatrixXcd dense = c.lowering_matrix().cast<std::complex<double>>();
    CHECK((c.apply_lowering(v) - dense * v).norm() <= 1e-14);
    CHECK((c.apply_raising(v) - dense.adjoint() * v).norm() <= 1e-14);
}
