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

#include "masersim/step_kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace masersim::engine {

TrigTables::TrigTables(LadderKind kind, const NonlinearityFn& f, double g_tau, int cutoff_in)
    : step(algebra::step_of(kind)), cutoff(cutoff_in) {
    if (cutoff < 0) {
        throw std::invalid_argument("trig tables need a non-negative cutoff");
    }
    if (g_tau < 0.0) {
        throw std::invalid_argument("Rabi angle g*tau must be non-negative");
    }
    cos_v.resize(static_cast<std::size_t>(cutoff + step) + 1);
    sin_v.resize(cos_v.size());
    for (int n = 0; n <= cutoff + step; ++n) {
        const double theta = g_tau * std::sqrt(algebra::ladder_strength(kind, f, n));
        cos_v[static_cast<std::size_t>(n)] = std::cos(theta);
        sin_v[static_cast<std::size_t>(n)] = std::sin(theta);
    }
}

namespace kernels {

namespace {

using Cx = std::complex<double>;

// Shared by the serial and OpenMP paths so the two are bitwise identical.
inline Cx recursion_element(const TrigTables& t, const AtomPreparation& atom,
                            const Eigen::MatrixXcd& in, int n, int m) {
    const int size = static_cast<int>(in.rows());
    const int s = t.step;
    const double* cv = t.cos_v.data();
    const double* sv = t.sin_v.data();

    auto get = [&](int a, int b) -> Cx {
        return (a >= 0 && a < size && b >= 0 && b < size) ? in(a, b) : Cx(0.0, 0.0);
    };

    const double raa = atom.rho_aa;
    const double rbb = atom.rho_bb;
    const Cx i_ab = Cx(0.0, 1.0) * atom.rho_ab();          // i |rho_ab| e^{i phi}
    const Cx i_ba = Cx(0.0, 1.0) * std::conj(atom.rho_ab());

    Cx v = (raa * cv[n + s] * cv[m + s] + rbb * cv[n] * cv[m]) * in(n, m);
    v += rbb * sv[n + s] * sv[m + s] * get(n + s, m + s);
    v += raa * sv[n] * sv[m] * get(n - s, m - s);
    v += i_ab * (cv[n + s] * sv[m + s]) * get(n, m + s);
    v += i_ba * (cv[n] * sv[m]) * get(n, m - s);
    v -= i_ba * (sv[n + s] * cv[m + s]) * get(n + s, m);
    v -= i_ab * (sv[n] * cv[m]) * get(n - s, m);
    return v;
}

inline Cx phase_element(double phase, int n, int m) {
    return std::polar(1.0, static_cast<double>(n - m) * phase);
}

void check_shapes(const TrigTables& t, const Eigen::MatrixXcd& in, const Eigen::MatrixXcd& out) {
    if (in.rows() != in.cols() || in.rows() != t.cutoff + 1) {
        throw std::invalid_argument("density matrix does not match trig tables");
    }
    if (out.rows() != in.rows() || out.cols() != in.cols()) {
        throw std::invalid_argument("output matrix has wrong shape");
    }
    if (&in == &out) {
        throw std::invalid_argument("recursion step cannot run in place");
    }
}

} // namespace

void recursion_step_serial(const TrigTables& tables, const AtomPreparation& atom,
                           const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out) {
    check_shapes(tables, in, out);
    const int size = static_cast<int>(in.rows());
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            out(n, m) = recursion_element(tables, atom, in, n, m);
        }
    }
}

void recursion_step_openmp(const TrigTables& tables, const AtomPreparation& atom,
                           const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out) {
    check_shapes(tables, in, out);
    const int size = static_cast<int>(in.rows());
#pragma omp parallel for schedule(static)
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            out(n, m) = recursion_element(tables, atom, in, n, m);
        }
    }
}

void apply_free_phase_serial(double phase, Eigen::MatrixXcd& rho) {
    const int size = static_cast<int>(rho.rows());
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            rho(n, m) *= phase_element(phase, n, m);
        }
    }
}

void apply_free_phase_openmp(double phase, Eigen::MatrixXcd& rho) {
    const int size = static_cast<int>(rho.rows());
#pragma omp parallel for schedule(static)
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            rho(n, m) *= phase_element(phase, n, m);
        }
    }
}

} // namespace kernels
} // namespace masersim::engine
