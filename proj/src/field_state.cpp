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

#include "masersim/field_state.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace masersim::engine {

AtomPreparation::AtomPreparation(double aa, double bb, double mag, double phase)
    : rho_aa(aa), rho_bb(bb), coh_mag(mag), phi(phase) {
    if (aa < 0.0 || bb < 0.0) {
        throw std::invalid_argument("atomic populations must be non-negative");
    }
    if (std::abs(aa + bb - 1.0) > 1e-14) {
        throw std::invalid_argument("atomic populations must sum to 1");
    }
    if (mag < 0.0 || mag > std::sqrt(aa * bb) + 1e-14) {
        throw std::invalid_argument("atomic coherence exceeds sqrt(rho_aa rho_bb)");
    }
}

AtomPreparation AtomPreparation::max_coherence(double aa, double phase) {
    return {aa, 1.0 - aa, std::sqrt(aa * (1.0 - aa)), phase};
}

FieldState::FieldState(int cutoff) {
    if (cutoff < 0) {
        throw std::invalid_argument("field cutoff must be non-negative");
    }
    rho_ = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    rho_(0, 0) = 1.0;
}

FieldState FieldState::from_pure(const states::PureState& psi) {
    FieldState out(psi.cutoff());
    out.rho_ = psi.amps() * psi.amps().adjoint();
    return out;
}

FieldState FieldState::from_density(Eigen::MatrixXcd rho, double leakage) {
    if (rho.rows() != rho.cols() || rho.rows() < 1) {
        throw std::invalid_argument("density matrix must be square and non-empty");
    }
    FieldState out(static_cast<int>(rho.rows()) - 1);
    out.rho_ = std::move(rho);
    out.leakage_ = leakage;
    return out;
}

double FieldState::hermiticity_deviation() const {
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double FieldState::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

} // namespace masersim::engine
