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

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "masersim/field_state.hpp"
#include "masersim/step_kernels.hpp"

namespace masersim::engine {

/// How each atom passage is computed: the matrix-element recursion, the
/// joint-unitary conjugation plus partial trace, or both in lockstep with an
/// elementwise agreement assertion (the built-in cross-oracle).
enum class StepMethod { Recursion, Unitary, Both };

struct PumpConfig {
    LadderKind kind = LadderKind::A;
    NonlinearityFn f = NonlinearityFn::identity();
    double g_tau = 0.0;
    int atoms = 0;                               // number of injected atoms K
    AtomPreparation atom = AtomPreparation::diagonal(1.0);
    std::optional<FieldState> initial;           // vacuum at `cutoff` when empty
    int cutoff = 16;
    double free_phase = 0.0;                     // omega*dt between atoms, mod 2pi
    StepMethod method = StepMethod::Recursion;
    double leak_budget = 1e-8;

    int step() const { return algebra::step_of(kind); }
    void validate() const;
};

/// Per-atom diagnostics of a pumping run.
struct RunRecord {
    int k;
    double trace;
    double leakage;
    double purity;
    double mean_n;
    double var_n;
    double mandel_q;
    double max_offdiag;
    std::optional<double> fidelity_target;
};

struct RunResult {
    FieldState final_state;
    std::vector<RunRecord> records;
    /// Largest recursion/unitary elementwise difference seen (Both only).
    double max_path_deviation = 0.0;
};

/**
 * Joint atom+field evolution operator for one passage, on the ordered basis
 * |a,0..cutoff>, |b,0..cutoff>. Each invariant pair {|a,n>, |b,n+s>} rotates
 * by the Rabi angle g_tau*sqrt(lambda(n+s)); pairs whose upper partner lies
 * past the cutoff keep the cosine on |a,n> but lose the sine row, which is
 * exactly the probability accounted as leakage.
 */
Eigen::MatrixXcd build_joint_unitary(LadderKind kind, const NonlinearityFn& f, double g_tau,
                                     int cutoff);

/// One atom passage via the matrix-element recursion.
FieldState step_atom_recursion(const FieldState& state, const AtomPreparation& atom,
                               LadderKind kind, const NonlinearityFn& f, double g_tau,
                               double free_phase = 0.0,
                               ExecPolicy policy = ExecPolicy::OpenMP);

/// One atom passage via rho_atom (x) rho_field, unitary conjugation and a
/// partial trace over the atom. The independent cross-check of the recursion.
FieldState step_atom_unitary(const FieldState& state, const AtomPreparation& atom,
                             LadderKind kind, const NonlinearityFn& f, double g_tau,
                             double free_phase = 0.0);

/**
 * Sends config.atoms identical atoms through the cavity. Emits one record per
 * step (plus the k = 0 snapshot); when `fidelity_target` is given each record
 * carries the overlap with it. Throws when leakage exceeds the budget or,
 * under StepMethod::Both, when the two paths drift apart beyond 1e-10.
 */
RunResult run_pumping(const PumpConfig& config,
                      const states::PureState* fidelity_target = nullptr,
                      ExecPolicy policy = ExecPolicy::OpenMP);

/// Weak-coupling drive amplitude the run converges to:
/// z = -i e^{-i phi} K g_tau sqrt(rho_aa rho_bb).
std::complex<double> target_z(const PumpConfig& config);

} // namespace masersim::engine
