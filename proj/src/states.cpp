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

#include "masersim/states.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace masersim::states {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ChainSpec {
    int base;   // lowest occupied Fock index
    int step;   // index distance between occupied levels
};

ChainSpec chain_of(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Nlcs:
        case FamilyTag::NlcsDual:
            return {0, 1};
        case FamilyTag::SqVac:
        case FamilyTag::EvenNlcs:
            return {0, 2};
        case FamilyTag::SqFirst:
        case FamilyTag::OddNlcs:
            return {1, 2};
    }
    throw std::logic_error("unreachable family tag");
}

// Real factor g_j in the term recurrence c_j = c_{j-1} * z * g_j, where j
// counts occupied levels from the bottom of the chain.
double term_factor(FamilyTag tag, const NonlinearityFn& f, int j) {
    const double dj = static_cast<double>(j);
    switch (tag) {
        case FamilyTag::Nlcs:
            return 1.0 / (std::sqrt(dj) * f(j));
        case FamilyTag::NlcsDual:
            return f(j) / std::sqrt(dj);
        case FamilyTag::SqVac:
            return std::sqrt(2.0 * dj * (2.0 * dj - 1.0)) * f(2 * j) / dj;
        case FamilyTag::SqFirst:
            return std::sqrt((2.0 * dj + 1.0) * (2.0 * dj)) * f(2 * j + 1) / dj;
        case FamilyTag::EvenNlcs:
            return 1.0 / (std::sqrt(2.0 * dj * (2.0 * dj - 1.0)) * f(2 * j));
        case FamilyTag::OddNlcs:
            return 1.0 / (std::sqrt((2.0 * dj + 1.0) * (2.0 * dj)) * f(2 * j + 1));
    }
    throw std::logic_error("unreachable family tag");
}

// Sequence whose limit bounds |z|^2 for the family's normalization series
// (the inverse squared term ratio, evaluated at chain position m).
double bound_sequence(FamilyTag tag, const NonlinearityFn& f, long m) {
    const double dm = static_cast<double>(m);
    auto f2 = [&](long n) {
        const double v = f(static_cast<int>(n));
        return v * v;
    };
    switch (tag) {
        case FamilyTag::Nlcs:
            return (dm + 1.0) * f2(m + 1);
        case FamilyTag::NlcsDual:
            return (dm + 1.0) / f2(m + 1);
        case FamilyTag::SqVac:
            return (dm + 1.0) / ((4.0 * dm + 2.0) * f2(2 * m + 2));
        case FamilyTag::SqFirst:
            return (dm + 1.0) / ((4.0 * dm + 6.0) * f2(2 * m + 3));
        case FamilyTag::EvenNlcs:
            return (2.0 * dm + 2.0) * (2.0 * dm + 1.0) * f2(2 * m + 2);
        case FamilyTag::OddNlcs:
            return (2.0 * dm + 3.0) * (2.0 * dm + 1.0) * f2(2 * m + 3);
    }
    throw std::logic_error("unreachable family tag");
}

} // namespace

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Nlcs: return "nlcs";
        case FamilyTag::NlcsDual: return "nlcs_dual";
        case FamilyTag::SqVac: return "sq_vac";
        case FamilyTag::SqFirst: return "sq_first";
        case FamilyTag::EvenNlcs: return "even_nlcs";
        case FamilyTag::OddNlcs: return "odd_nlcs";
    }
    throw std::logic_error("unreachable family tag");
}

FamilyTag parse_family_tag(const std::string& name) {
    if (name == "nlcs") return FamilyTag::Nlcs;
    if (name == "nlcs_dual") return FamilyTag::NlcsDual;
    if (name == "sq_vac") return FamilyTag::SqVac;
    if (name == "sq_first") return FamilyTag::SqFirst;
    if (name == "even_nlcs") return FamilyTag::EvenNlcs;
    if (name == "odd_nlcs") return FamilyTag::OddNlcs;
    throw std::invalid_argument("unknown state family '" + name + "'");
}

int family_step(FamilyTag tag) {
    return chain_of(tag).step;
}

double convergence_bound(FamilyTag tag, const NonlinearityFn& f) {
    if (!f.has_asymptotics()) {
        throw std::invalid_argument("tabulated nonlinearity has no large-n asymptotics");
    }
    const double s1 = bound_sequence(tag, f, 1000);
    const double s2 = bound_sequence(tag, f, 10000);
    const double s3 = bound_sequence(tag, f, 100000);

    // Persistent decade-over-decade growth means the ratio limit is
    // unbounded: the series is entire in z.
    if (s1 < s2 && s2 < s3 && (s3 > 1e12 || s3 >= 1.05 * s2)) {
        return kInf;
    }
    // Aitken extrapolation of the three samples; degenerate differences mean
    // the sequence has already settled.
    const double d1 = s2 - s1;
    const double d2 = s3 - s2;
    const double den = d2 - d1;
    if (std::abs(den) < 1e-12 * (std::abs(s3) + 1.0)) {
        return s3;
    }
    const double extrapolated = s3 - d2 * d2 / den;
    if (!std::isfinite(extrapolated)) return s3;
    return std::max(extrapolated, 0.0);
}

PureState build_state(const StateFamily& family, int cutoff, double tail_tolerance) {
    const ChainSpec chain = chain_of(family.tag);
    if (cutoff < chain.base) {
        throw std::invalid_argument("cutoff below the family's lowest occupied level");
    }
    const std::complex<double> z = family.z;

    if (z == 0.0) {
        Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cutoff + 1);
        amps[chain.base] = 1.0;
        return PureState(std::move(amps), 0.0, tail_tolerance);
    }

    if (family.f.has_asymptotics()) {
        const double bound = convergence_bound(family.tag, family.f);
        if (std::isfinite(bound) && std::norm(z) >= bound) {
            throw std::domain_error("|z|^2 = " + std::to_string(std::norm(z)) +
                                    " is outside the convergence disc (bound " +
                                    std::to_string(bound) + ") of family " +
                                    to_string(family.tag));
        }
    }

    const int terms = (cutoff - chain.base) / chain.step + 1;
    if (terms < 2) {
        throw std::runtime_error("cutoff leaves fewer than two series terms; increase it");
    }

    // Accumulate log-magnitudes and unit phases separately; (2m)! and the
    // f-factorials overflow double well before interesting cutoffs.
    const double log_abs_z = std::log(std::abs(z));
    const std::complex<double> phase_z = z / std::abs(z);

    std::vector<double> log_mag(terms, 0.0);
    std::vector<std::complex<double>> phase(terms, 1.0);
    double lm = 0.0;
    std::complex<double> ph = 1.0;
    for (int j = 1; j < terms; ++j) {
        const double g = term_factor(family.tag, family.f, j);
        lm += log_abs_z + std::log(std::abs(g));
        ph *= phase_z * (g < 0.0 ? -1.0 : 1.0);
        log_mag[j] = lm;
        phase[j] = ph;
    }

    double lmax = log_mag[0];
    for (double v : log_mag) lmax = std::max(lmax, v);

    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cutoff + 1);
    for (int j = 0; j < terms; ++j) {
        amps[chain.base + j * chain.step] = std::exp(log_mag[j] - lmax) * phase[j];
    }

    const double tail = tail_bound_from_amps(amps, chain.step);
    return PureState(std::move(amps), tail, tail_tolerance);
}

namespace {

// acc = exp(zeta * Op) v by series; Op is nilpotent on the truncated space,
// so the loop terminates once a term vanishes.
template <typename ApplyOp>
Eigen::VectorXcd exp_series(const ApplyOp& apply, std::complex<double> zeta, Eigen::VectorXcd v) {
    Eigen::VectorXcd acc = v;
    Eigen::VectorXcd term = std::move(v);
    for (int k = 1; k <= 100000; ++k) {
        term = (zeta / static_cast<double>(k)) * apply(term);
        if (term.norm() == 0.0) return acc;
        acc += term;
        if (term.norm() <= acc.norm() * 1e-300) return acc;
    }
    throw std::runtime_error("displacement series did not terminate");
}

} // namespace

PureState displacement_apply(DisplacementPair pair, const NonlinearityFn& f,
                             std::complex<double> z, const PureState& seed, int cutoff,
                             double tail_tolerance) {
    LadderKind raise_kind{};
    LadderKind lower_kind{};
    switch (pair) {
        case DisplacementPair::DF:
            raise_kind = LadderKind::B;
            lower_kind = LadderKind::A;
            break;
        case DisplacementPair::DFPrime:
            raise_kind = LadderKind::A;
            lower_kind = LadderKind::B;
            break;
        case DisplacementPair::D0:
            raise_kind = LadderKind::C;
            lower_kind = LadderKind::B0;
            break;
        case DisplacementPair::D1:
            raise_kind = LadderKind::C;
            lower_kind = LadderKind::B1;
            break;
    }
    if (seed.cutoff() > cutoff) {
        throw std::invalid_argument("seed state larger than requested cutoff");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff + 1);
    v.head(seed.cutoff() + 1) = seed.amps();

    const algebra::DeformedLadder raiser(raise_kind, f, cutoff);
    const algebra::DeformedLadder lower(lower_kind, f, cutoff);

    v = exp_series([&](const Eigen::VectorXcd& x) { return lower.apply_lowering(x); },
                   -std::conj(z), std::move(v));
    v = exp_series([&](const Eigen::VectorXcd& x) { return raiser.apply_raising(x); },
                   z, std::move(v));
    v *= std::exp(-0.5 * std::norm(z));

    const double tail = (z == 0.0) ? 0.0 : tail_bound_from_amps(v, raiser.step());
    return PureState(std::move(v), tail, tail_tolerance);
}

double eigenrelation_residual(LadderKind lower, const PureState& state,
                              std::complex<double> z, const NonlinearityFn& f) {
    const int cutoff = state.cutoff();
    const algebra::DeformedLadder ladder(lower, f, cutoff);
    const Eigen::VectorXcd residual = ladder.apply_lowering(state.amps()) - z * state.amps();
    const int interior = cutoff - ladder.step();
    if (interior < 0) {
        throw std::invalid_argument("cutoff below ladder step");
    }
    return residual.head(interior + 1).norm();
}

} // namespace masersim::states
