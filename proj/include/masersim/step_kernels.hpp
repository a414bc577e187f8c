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

#include <vector>

#include <Eigen/Dense>

#include "masersim/field_state.hpp"
#include "masersim/ladder.hpp"

namespace masersim::engine {

using algebra::LadderKind;
using algebra::NonlinearityFn;

/// Whether hot loops run through the OpenMP kernels or the serial reference.
/// Both produce bitwise identical results; every output element is computed
/// independently with the same expression.
enum class ExecPolicy { Serial, OpenMP };

/**
 * Per-level cosines and sines of the Rabi angles, cos/sin(g_tau *
 * sqrt(lambda(n))) for n = 0..cutoff+step. Precomputed once per pump
 * configuration; every step kernel reads from here.
 */
struct TrigTables {
    int step;
    int cutoff;
    std::vector<double> cos_v;
    std::vector<double> sin_v;

    TrigTables(LadderKind kind, const NonlinearityFn& f, double g_tau, int cutoff);
};

namespace kernels {

/**
 * One atom passage in matrix-element form. For every (n, n') the update mixes
 * the neighbours (n +- s, n' +- s) with cos/cos, sin/sin and coherence-carrying
 * cos/sin weights; reads past the cutoff are zero (their weight is what leaks).
 * `out` must be a distinct (cutoff+1)^2 matrix.
 */
void recursion_step_serial(const TrigTables& tables, const AtomPreparation& atom,
                           const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out);
void recursion_step_openmp(const TrigTables& tables, const AtomPreparation& atom,
                           const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out);

/// Free evolution between atoms: element (n, n') gains exp(i (n-n') phase).
void apply_free_phase_serial(double phase, Eigen::MatrixXcd& rho);
void apply_free_phase_openmp(double phase, Eigen::MatrixXcd& rho);

inline void recursion_step(const TrigTables& tables, const AtomPreparation& atom,
                           const Eigen::MatrixXcd& in, Eigen::MatrixXcd& out,
                           ExecPolicy policy) {
    if (policy == ExecPolicy::OpenMP) {
        recursion_step_openmp(tables, atom, in, out);
    } else {
        recursion_step_serial(tables, atom, in, out);
    }
}

inline void apply_free_phase(double phase, Eigen::MatrixXcd& rho, ExecPolicy policy) {
    if (policy == ExecPolicy::OpenMP) {
        apply_free_phase_openmp(phase, rho);
    } else {
        apply_free_phase_serial(phase, rho);
    }
}

} // namespace kernels
} // namespace masersim::engine
