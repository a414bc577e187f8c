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

#include "masersim/pure_state.hpp"

namespace masersim::engine {

/**
 * Two-level atom preparation entering the cavity:
 * upper/lower populations, coherence magnitude |rho_ab| and its phase.
 * Requires rho_aa + rho_bb = 1 and |rho_ab| <= sqrt(rho_aa rho_bb).
 */
struct AtomPreparation {
    double rho_aa;
    double rho_bb;
    double coh_mag;
    double phi;

    AtomPreparation(double aa, double bb, double mag, double phase);

    /// No coherence: a statistical mixture of upper and lower.
    static AtomPreparation diagonal(double aa) { return {aa, 1.0 - aa, 0.0, 0.0}; }
    /// Maximal coherence |rho_ab| = sqrt(rho_aa rho_bb) at the given phase.
    static AtomPreparation max_coherence(double aa, double phase);

    std::complex<double> rho_ab() const { return std::polar(coh_mag, phi); }
};

/**
 * Truncated cavity-field density matrix plus the probability that has been
 * pushed past the cutoff so far. Leakage is tracked, never renormalized
 * away: trace(rho) + leakage stays 1 for an initially normalized state.
 */
class FieldState {
  public:
    explicit FieldState(int cutoff);   // vacuum
    static FieldState from_pure(const states::PureState& psi);
    static FieldState from_density(Eigen::MatrixXcd rho, double leakage = 0.0);

    int cutoff() const { return static_cast<int>(rho_.rows()) - 1; }
    const Eigen::MatrixXcd& rho() const { return rho_; }
    Eigen::MatrixXcd& rho() { return rho_; }

    double leakage() const { return leakage_; }
    void add_leakage(double delta) { leakage_ += delta; }

    double trace() const { return rho_.trace().real(); }
    /// max |rho - rho^+| entry.
    double hermiticity_deviation() const;
    /// Smallest eigenvalue of the Hermitian part; an on-demand positivity
    /// check, not part of the per-step invariants.
    double min_eigenvalue() const;

  private:
    Eigen::MatrixXcd rho_;
    double leakage_ = 0.0;
};

} // namespace masersim::engine
