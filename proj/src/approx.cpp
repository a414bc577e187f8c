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

#include "masersim/approx.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace masersim::approx {

namespace {

using Cx = std::complex<double>;

double lambda_real(LadderKind kind, const NonlinearityFn& f, double x) {
    const double f2 = [&] {
        const double v = f.eval_real(x);
        return v * v;
    }();
    switch (kind) {
        case LadderKind::A: return x <= 0.0 ? 0.0 : x * f2;
        case LadderKind::B: return x <= 0.0 ? 0.0 : x / f2;
        case LadderKind::C: return x <= 1.0 ? 0.0 : x * (x - 1.0) * f2;
        case LadderKind::B0: return x <= 1.0 ? 0.0 : 0.25 * x / (x - 1.0) / f2;
        case LadderKind::B1: return x <= 1.0 ? 0.0 : 0.25 * (x - 1.0) / x / f2;
    }
    throw std::logic_error("unreachable ladder kind");
}

// Cumulative sine chains: chain(n) multiplies sin(g_tau sqrt(lambda(l))) for
// l = n, n-s, ... down to (but excluding) n mod s. Stored as log-magnitude
// and sign so large cutoffs can't underflow.
struct SineChains {
    std::vector<double> log_mag;
    std::vector<double> sign;
    double min_abs_sin = 2.0;
};

SineChains sine_chains(LadderKind kind, const NonlinearityFn& f, double g_tau, int cutoff) {
    const int s = algebra::step_of(kind);
    SineChains chains;
    chains.log_mag.assign(static_cast<std::size_t>(cutoff) + 1, 0.0);
    chains.sign.assign(static_cast<std::size_t>(cutoff) + 1, 1.0);
    for (int n = s; n <= cutoff; ++n) {
        const double sine = std::sin(g_tau * std::sqrt(algebra::ladder_strength(kind, f, n)));
        chains.min_abs_sin = std::min(chains.min_abs_sin, std::abs(sine));
        chains.log_mag[n] = chains.log_mag[n - s] + std::log(std::abs(sine));
        chains.sign[n] = chains.sign[n - s] * (sine < 0.0 ? -1.0 : 1.0);
    }
    return chains;
}

// rho(n,n') = w^{(n'-n)/s} * chain(n) chain(n') * rho_aa^{(n+n')/(2s)} * rho~(n,n')
// with w = i e^{-i phi}. For cross-parity elements under s = 2 the winding
// exponent is a half integer; the principal continuous branch
// exp(i (pi/2 - phi) (n'-n)/s) is used.
Cx tilde_factor(const SineChains& chains, double log_rho_aa, double arg_w, int s, int n, int m) {
    const double log_mag =
        chains.log_mag[n] + chains.log_mag[m] + (n + m) / (2.0 * s) * log_rho_aa;
    const double sign = chains.sign[n] * chains.sign[m];
    return sign * std::exp(log_mag) * std::polar(1.0, arg_w * (m - n) / s);
}

double multinomial_log(int atoms, int k, int kp, int p) {
    return std::lgamma(atoms + 1.0) - std::lgamma(p + 1.0) - std::lgamma(k - p + 1.0) -
           std::lgamma(kp - p + 1.0) - std::lgamma(atoms - k - kp + p + 1.0);
}

Cx tilde_sum(const TildeTable& seed, int atoms, double rho_bb, int n, int n_prime, bool p0_only) {
    if (atoms < 1) {
        throw std::invalid_argument("tilde solution needs at least one atom");
    }
    if (rho_bb < 0.0) {
        throw std::invalid_argument("rho_bb must be non-negative");
    }
    const int s = seed.step;
    const int size = static_cast<int>(seed.values.rows());
    if (n >= size || n_prime >= size || n < 0 || n_prime < 0) {
        throw std::out_of_range("tilde solution index outside the seed table");
    }
    const double half_log_rbb = rho_bb > 0.0 ? 0.5 * std::log(rho_bb) : 0.0;

    Cx acc(0.0, 0.0);
    for (int k = 0; k * s <= n; ++k) {
        for (int kp = 0; kp * s <= n_prime; ++kp) {
            const Cx seed_val = seed.values(n - k * s, n_prime - kp * s);
            if (seed_val == 0.0) continue;
            const int pmax = p0_only ? 0 : std::min(k, kp);
            for (int p = 0; p <= pmax; ++p) {
                if (atoms - k - kp + p < 0) continue;   // no such atom ordering
                const int bb_pow = k + kp - 2 * p;
                if (rho_bb == 0.0 && bb_pow != 0) continue;
                const double lw = multinomial_log(atoms, k, kp, p) + bb_pow * half_log_rbb;
                acc += std::exp(lw) * seed_val;
            }
        }
    }
    return acc;
}

} // namespace

WeakCouplingReport weak_coupling_check(const engine::PumpConfig& config, double nbar,
                                       double threshold) {
    if (nbar < 0.0) {
        throw std::invalid_argument("mean photon number must be non-negative");
    }
    WeakCouplingReport report{};
    report.g_tau = config.g_tau;
    report.nbar = nbar;
    report.threshold = threshold;
    report.margin1 = config.g_tau;
    report.margin2 =
        config.g_tau * std::sqrt(std::max(0.0, lambda_real(config.kind, config.f,
                                                           nbar + config.step())));
    report.pass = report.margin1 < threshold && report.margin2 < threshold;
    return report;
}

TildeTable tilde_forward(const engine::FieldState& state, const engine::AtomPreparation& atom,
                         LadderKind kind, const NonlinearityFn& f, double g_tau) {
    if (atom.rho_aa <= 0.0) {
        throw std::invalid_argument("tilde transform needs rho_aa > 0");
    }
    const int s = algebra::step_of(kind);
    const int cutoff = state.cutoff();
    const SineChains chains = sine_chains(kind, f, g_tau, cutoff);
    if (chains.min_abs_sin < 1e-12) {
        throw std::runtime_error(
            "tilde transform singular: a Rabi angle g_tau*sqrt(lambda) hits a multiple of pi");
    }
    const double log_rho_aa = std::log(atom.rho_aa);
    const double arg_w = M_PI / 2.0 - atom.phi;

    TildeTable table{s, Eigen::MatrixXcd(cutoff + 1, cutoff + 1)};
    for (int m = 0; m <= cutoff; ++m) {
        for (int n = 0; n <= cutoff; ++n) {
            table.values(n, m) =
                state.rho()(n, m) / tilde_factor(chains, log_rho_aa, arg_w, s, n, m);
        }
    }
    return table;
}

engine::FieldState tilde_inverse(const TildeTable& table, const engine::AtomPreparation& atom,
                                 LadderKind kind, const NonlinearityFn& f, double g_tau) {
    if (atom.rho_aa <= 0.0) {
        throw std::invalid_argument("tilde transform needs rho_aa > 0");
    }
    const int s = algebra::step_of(kind);
    if (s != table.step) {
        throw std::invalid_argument("tilde table step does not match the ladder kind");
    }
    const int cutoff = static_cast<int>(table.values.rows()) - 1;
    const SineChains chains = sine_chains(kind, f, g_tau, cutoff);
    const double log_rho_aa = std::log(atom.rho_aa);
    const double arg_w = M_PI / 2.0 - atom.phi;

    Eigen::MatrixXcd rho(cutoff + 1, cutoff + 1);
    for (int m = 0; m <= cutoff; ++m) {
        for (int n = 0; n <= cutoff; ++n) {
            rho(n, m) = table.values(n, m) * tilde_factor(chains, log_rho_aa, arg_w, s, n, m);
        }
    }
    return engine::FieldState::from_density(std::move(rho));
}

std::complex<double> tilde_solution(const TildeTable& seed, int atoms, double rho_bb, int n,
                                    int n_prime) {
    return tilde_sum(seed, atoms, rho_bb, n, n_prime, false);
}

std::complex<double> tilde_solution_p0(const TildeTable& seed, int atoms, double rho_bb, int n,
                                       int n_prime) {
    return tilde_sum(seed, atoms, rho_bb, n, n_prime, true);
}

double dominance_margin(int n, int n_prime, double rho_bb, int atoms) {
    if (rho_bb <= 0.0) {
        throw std::invalid_argument("dominance margin undefined for rho_bb = 0");
    }
    if (atoms < 1) {
        throw std::invalid_argument("dominance margin needs at least one atom");
    }
    return (n + n_prime + static_cast<double>(n) * n_prime / rho_bb) / atoms;
}

states::PureState closed_form_state(const states::PureState& psi0, std::complex<double> z,
                                    const NonlinearityFn& f, int step, int cutoff,
                                    double tail_tolerance) {
    if (step != 1 && step != 2) {
        throw std::invalid_argument("closed form is defined for step 1 or 2");
    }
    if (psi0.cutoff() > cutoff) {
        throw std::invalid_argument("initial state larger than requested cutoff");
    }
    if (z == 0.0) {
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cutoff + 1);
        amps.head(psi0.cutoff() + 1) = psi0.amps();
        return states::PureState(std::move(amps), psi0.tail_bound(), tail_tolerance);
    }
    const LadderKind kind = step == 1 ? LadderKind::A : LadderKind::C;
    const algebra::DeformedLadder ladder(kind, f, cutoff);
    const double log_abs_z = std::log(std::abs(z));
    const double arg_z = std::arg(z);

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) {
        Cx acc(0.0, 0.0);
        // log of sqrt(L!(n) / L!(n - k step)), grown one strength at a time
        double log_chain = 0.0;
        for (int k = 0; n - k * step >= 0; ++k) {
            if (k > 0) {
                const double lam = ladder.strength(n - (k - 1) * step);
                if (lam == 0.0) break;   // chain bottomed out; higher k vanish too
                log_chain += 0.5 * std::log(lam);
            }
            const int src = n - k * step;
            const Cx psi_src = src <= psi0.cutoff() ? psi0.amp(src) : Cx(0.0, 0.0);
            if (psi_src == 0.0) continue;
            const double lt = k * log_abs_z - std::lgamma(k + 1.0) + log_chain;
            acc += std::exp(lt) * std::polar(1.0, k * arg_z) * psi_src;
        }
        amps[n] = acc;
    }

    const double tail = states::tail_bound_from_amps(amps, step);
    return states::PureState(std::move(amps), tail, tail_tolerance);
}

} // namespace masersim::approx
