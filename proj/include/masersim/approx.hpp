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

#include <Eigen/Dense>

#include "masersim/engine.hpp"
#include "masersim/states.hpp"

namespace masersim::approx {

using algebra::LadderKind;
using algebra::NonlinearityFn;

/**
 * Weak-coupling validity: the per-atom Rabi angle must be small both at the
 * bottom of the ladder (margin1 = g_tau) and around the occupied levels
 * (margin2 = g_tau * sqrt(lambda(nbar + step)), the strength evaluated at
 * the mean photon number's upper neighbour).
 */
struct WeakCouplingReport {
    double g_tau;
    double nbar;
    double margin1;
    double margin2;
    double threshold;
    bool pass;
};

WeakCouplingReport weak_coupling_check(const engine::PumpConfig& config, double nbar,
                                       double threshold = 0.05);

/// Phase-independent matrix elements: the density matrix with the sine
/// chains, the rho_aa powers and the (i e^{-i phi}) winding divided out.
struct TildeTable {
    int step;
    Eigen::MatrixXcd values;
};

/**
 * Forward rescaling rho -> rho~. Requires rho_aa > 0 and every sine factor
 * sin(g_tau sqrt(lambda(l))) on the index chains to be nonzero; a Rabi angle
 * hitting a multiple of pi makes the transform singular (std::runtime_error).
 */
TildeTable tilde_forward(const engine::FieldState& state, const engine::AtomPreparation& atom,
                         LadderKind kind, const NonlinearityFn& f, double g_tau);

/// Inverse rescaling rho~ -> rho; composed with tilde_forward it is the
/// identity to rounding.
engine::FieldState tilde_inverse(const TildeTable& table, const engine::AtomPreparation& atom,
                                 LadderKind kind, const NonlinearityFn& f, double g_tau);

/**
 * Closed-form weak-coupling solution for rho~ after K atoms, as the triple
 * sum of multinomial weights against the seed table:
 *
 *   rho~K(n,n') = sum_{k,k',p} K! rho_bb^{(k+k'-2p)/2}
 *                 / (p! (k-p)! (k'-p)! (K-k-k'+p)!)
 *                 * rho~0(n - k s, n' - k' s)
 *
 * evaluated with log-space multinomials. Terms whose last factorial argument
 * would be negative vanish.
 */
std::complex<double> tilde_solution(const TildeTable& seed, int atoms, double rho_bb, int n,
                                    int n_prime);

/// Same sum restricted to p = 0, the part that dominates when
/// dominance_margin is small.
std::complex<double> tilde_solution_p0(const TildeTable& seed, int atoms, double rho_bb, int n,
                                       int n_prime);

/// (n + n' + n n'/rho_bb) / K. Small values certify that the p = 0 terms
/// dominate tilde_solution. rho_bb must be positive.
double dominance_margin(int n, int n_prime, double rho_bb, int atoms);

/**
 * Closed-form pure-state propagator in the weak-coupling limit:
 *
 *   psi_K(n) = sum_k z^k/k! * sqrt(L!(n) / L!(n - k s)) * psi_0(n - k s)
 *
 * where L! is the strength factorial along the chain (s = 1 uses the
 * one-photon strengths n f^2(n), s = 2 the two-photon strengths
 * n(n-1) f^2(n), empty products = 1). Normalized on return.
 */
states::PureState closed_form_state(const states::PureState& psi0, std::complex<double> z,
                                    const NonlinearityFn& f, int step, int cutoff,
                                    double tail_tolerance = states::kDefaultTailTolerance);

} // namespace masersim::approx
