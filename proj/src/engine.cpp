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

#include "masersim/engine.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "masersim/analysis.hpp"

namespace masersim::engine {

namespace {

std::string sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", value);
    return buf;
}

} // namespace

void PumpConfig::validate() const {
    if (g_tau < 0.0) {
        throw std::invalid_argument("g_tau must be non-negative");
    }
    if (atoms < 0) {
        throw std::invalid_argument("atom count must be non-negative");
    }
    if (cutoff < 2 * step() + 4) {
        throw std::invalid_argument("cutoff must be at least 2*step + 4");
    }
    if (initial && initial->cutoff() != cutoff) {
        throw std::invalid_argument("initial state cutoff does not match config cutoff");
    }
    if (leak_budget < 0.0) {
        throw std::invalid_argument("leak budget must be non-negative");
    }
    // The boundary cosines read lambda(cutoff + step); surface table problems now.
    (void)algebra::ladder_strength(kind, f, cutoff + step());
}

Eigen::MatrixXcd build_joint_unitary(LadderKind kind, const NonlinearityFn& f, double g_tau,
                                     int cutoff) {
    const int s = algebra::step_of(kind);
    const int dim = cutoff + 1;
    const std::complex<double> minus_i(0.0, -1.0);
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2 * dim, 2 * dim);
    for (int n = 0; n <= cutoff; ++n) {
        const double theta_up = g_tau * std::sqrt(algebra::ladder_strength(kind, f, n + s));
        const double theta_dn = g_tau * std::sqrt(algebra::ladder_strength(kind, f, n));
        u(n, n) = std::cos(theta_up);                                  // <a,n|U|a,n>
        u(dim + n, dim + n) = std::cos(theta_dn);                      // <b,n|U|b,n>
        if (n + s <= cutoff) {
            u(dim + n + s, n) = minus_i * std::sin(theta_up);          // <b,n+s|U|a,n>
        }
        if (n - s >= 0) {
            u(n - s, dim + n) = minus_i * std::sin(theta_dn);          // <a,n-s|U|b,n>
        }
    }
    return u;
}

namespace {

FieldState finish_step(const FieldState& before, Eigen::MatrixXcd rho_after, double free_phase,
                       ExecPolicy policy) {
    const double trace_before = before.trace();
    const double trace_after = rho_after.trace().real();
    if (free_phase != 0.0) {
        kernels::apply_free_phase(free_phase, rho_after, policy);
    }
    FieldState out = FieldState::from_density(std::move(rho_after),
                                              before.leakage() + (trace_before - trace_after));
    return out;
}

FieldState step_unitary_with(const Eigen::MatrixXcd& u, const FieldState& state,
                             const AtomPreparation& atom, double free_phase) {
    const int dim = state.cutoff() + 1;
    const Eigen::MatrixXcd& rho = state.rho();
    const std::complex<double> rho_ab = atom.rho_ab();

    Eigen::MatrixXcd joint(2 * dim, 2 * dim);
    joint.topLeftCorner(dim, dim) = atom.rho_aa * rho;
    joint.topRightCorner(dim, dim) = rho_ab * rho;
    joint.bottomLeftCorner(dim, dim) = std::conj(rho_ab) * rho;
    joint.bottomRightCorner(dim, dim) = atom.rho_bb * rho;

    const Eigen::MatrixXcd evolved = u * joint * u.adjoint();
    Eigen::MatrixXcd traced =
        evolved.topLeftCorner(dim, dim) + evolved.bottomRightCorner(dim, dim);
    return finish_step(state, std::move(traced), free_phase, ExecPolicy::Serial);
}

} // namespace

FieldState step_atom_recursion(const FieldState& state, const AtomPreparation& atom,
                               LadderKind kind, const NonlinearityFn& f, double g_tau,
                               double free_phase, ExecPolicy policy) {
    const TrigTables tables(kind, f, g_tau, state.cutoff());
    Eigen::MatrixXcd out(state.cutoff() + 1, state.cutoff() + 1);
    kernels::recursion_step(tables, atom, state.rho(), out, policy);
    return finish_step(state, std::move(out), free_phase, policy);
}

FieldState step_atom_unitary(const FieldState& state, const AtomPreparation& atom,
                             LadderKind kind, const NonlinearityFn& f, double g_tau,
                             double free_phase) {
    const Eigen::MatrixXcd u = build_joint_unitary(kind, f, g_tau, state.cutoff());
    return step_unitary_with(u, state, atom, free_phase);
}

RunResult run_pumping(const PumpConfig& config, const states::PureState* fidelity_target,
                      ExecPolicy policy) {
    config.validate();

    FieldState state = config.initial ? *config.initial : FieldState(config.cutoff);
    std::optional<FieldState> shadow;   // unitary-path twin under StepMethod::Both
    if (config.method == StepMethod::Both) shadow = state;

    const bool use_recursion = config.method != StepMethod::Unitary;
    const TrigTables tables(config.kind, config.f, config.g_tau, config.cutoff);
    Eigen::MatrixXcd u;
    if (config.method != StepMethod::Recursion) {
        u = build_joint_unitary(config.kind, config.f, config.g_tau, config.cutoff);
    }

    RunResult result{state, {}, 0.0};
    auto record = [&](int k, const FieldState& s) {
        const analysis::ObservableSet obs = analysis::observables(s);
        RunRecord r{k,        s.trace(),  s.leakage(),    obs.purity,
                    obs.mean_n, obs.var_n, obs.mandel_q, obs.max_offdiag,
                    std::nullopt};
        if (fidelity_target != nullptr) {
            r.fidelity_target = analysis::fidelity(s, *fidelity_target);
        }
        result.records.push_back(r);
    };
    record(0, state);

    Eigen::MatrixXcd scratch(config.cutoff + 1, config.cutoff + 1);
    for (int k = 1; k <= config.atoms; ++k) {
        if (use_recursion) {
            kernels::recursion_step(tables, config.atom, state.rho(), scratch, policy);
            state = finish_step(state, scratch, config.free_phase, policy);
        } else {
            state = step_unitary_with(u, state, config.atom, config.free_phase);
        }
        if (shadow) {
            shadow = step_unitary_with(u, *shadow, config.atom, config.free_phase);
            const double dev = (state.rho() - shadow->rho()).cwiseAbs().maxCoeff();
            result.max_path_deviation = std::max(result.max_path_deviation, dev);
            if (dev > 1e-10) {
                throw std::runtime_error("recursion and unitary paths disagree by " + sci(dev) +
                                         " at atom " + std::to_string(k));
            }
        }
        if (state.leakage() > config.leak_budget) {
            throw std::runtime_error("leakage " + sci(state.leakage()) +
                                     " exceeded the budget at atom " + std::to_string(k) +
                                     "; raise the cutoff");
        }
        record(k, state);
    }

    result.final_state = std::move(state);
    return result;
}

std::complex<double> target_z(const PumpConfig& config) {
    const std::complex<double> minus_i(0.0, -1.0);
    return minus_i * std::polar(1.0, -config.atom.phi) * static_cast<double>(config.atoms) *
           config.g_tau * std::sqrt(config.atom.rho_aa * config.atom.rho_bb);
}

} // namespace masersim::engine
