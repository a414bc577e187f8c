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

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "masersim/nonlinearity.hpp"
#include "masersim/states.hpp"

namespace test_helpers {

using Cx = std::complex<double>;
using masersim::algebra::NonlinearityFn;
using masersim::states::FamilyTag;

inline std::vector<NonlinearityFn> family_set() {
    return {NonlinearityFn::identity(), NonlinearityFn::inverse_sqrt(),
            NonlinearityFn::power(1.0), NonlinearityFn::power(-1.0)};
}

// Direct-product evaluation of the family coefficients, deliberately naive
// (plain double factorial products, no log-space): the independent oracle
// for build_state. Safe for cutoff <= 34.
inline Eigen::VectorXcd naive_family_amps(FamilyTag tag, const NonlinearityFn& f, Cx z,
                                          int cutoff) {
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(cutoff + 1);
    auto fact = [](int n) {
        double r = 1.0;
        for (int j = 2; j <= n; ++j) r *= j;
        return r;
    };
    auto f_fact = [&](int n) {   // f(1) f(2) ... f(n)
        double r = 1.0;
        for (int j = 1; j <= n; ++j) r *= f(j);
        return r;
    };
    auto f_dfact_even = [&](int n) {   // f(2) f(4) ... f(n)
        double r = 1.0;
        for (int j = 2; j <= n; j += 2) r *= f(j);
        return r;
    };
    auto f_dfact_odd = [&](int n) {   // f(3) f(5) ... f(n)
        double r = 1.0;
        for (int j = 3; j <= n; j += 2) r *= f(j);
        return r;
    };
    auto zpow = [&](int k) {
        Cx r = 1.0;
        for (int j = 0; j < k; ++j) r *= z;
        return r;
    };
    switch (tag) {
        case FamilyTag::Nlcs:
            for (int n = 0; n <= cutoff; ++n)
                c[n] = zpow(n) / (std::sqrt(fact(n)) * f_fact(n));
            break;
        case FamilyTag::NlcsDual:
            for (int n = 0; n <= cutoff; ++n)
                c[n] = zpow(n) * f_fact(n) / std::sqrt(fact(n));
            break;
        case FamilyTag::SqVac:
            for (int m = 0; 2 * m <= cutoff; ++m)
                c[2 * m] = zpow(m) / fact(m) * std::sqrt(fact(2 * m)) * f_dfact_even(2 * m);
            break;
        case FamilyTag::SqFirst:
            for (int m = 0; 2 * m + 1 <= cutoff; ++m)
                c[2 * m + 1] =
                    zpow(m) / fact(m) * std::sqrt(fact(2 * m + 1)) * f_dfact_odd(2 * m + 1);
            break;
        case FamilyTag::EvenNlcs:
            for (int m = 0; 2 * m <= cutoff; ++m)
                c[2 * m] = zpow(m) / (std::sqrt(fact(2 * m)) * f_dfact_even(2 * m));
            break;
        case FamilyTag::OddNlcs:
            for (int m = 0; 2 * m + 1 <= cutoff; ++m)
                c[2 * m + 1] =
                    zpow(m) / (std::sqrt(fact(2 * m + 1)) * f_dfact_odd(2 * m + 1));
            break;
    }
    c /= c.norm();
    return c;
}

// Deterministic pseudo-random Hermitian, positive, unit-trace matrix.
inline Eigen::MatrixXcd random_density(int cutoff, unsigned seed) {
    std::mt19937 eng(seed);
    auto uniform = [&eng] { return eng() / 4294967296.0 - 0.5; };
    const int dim = cutoff + 1;
    Eigen::MatrixXcd x(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) x(i, j) = Cx(uniform(), uniform());
    Eigen::MatrixXcd rho = x * x.adjoint();
    rho /= rho.trace().real();
    return rho;
}

inline Eigen::VectorXcd random_state(int cutoff, unsigned seed) {
    std::mt19937 eng(seed);
    auto uniform = [&eng] { return eng() / 4294967296.0 - 0.5; };
    Eigen::VectorXcd v(cutoff + 1);
    for (int i = 0; i <= cutoff; ++i) v[i] = Cx(uniform(), uniform());
    v /= v.norm();
    return v;
}

} // namespace test_helpers
