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

#include "masersim/verify.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <utility>

#include "masersim/algebra_checks.hpp"
#include "masersim/analysis.hpp"
#include "masersim/engine.hpp"
#include "masersim/states.hpp"

namespace masersim::verify {

namespace {

using algebra::DeformedLadder;
using algebra::LadderKind;
using algebra::NonlinearityFn;

std::vector<NonlinearityFn> test_family_set() {
    return {NonlinearityFn::identity(), NonlinearityFn::inverse_sqrt(),
            NonlinearityFn::power(1.0), NonlinearityFn::power(-1.0)};
}

constexpr int kCutoff = 32;

double duality_deviation(LadderKind lower, LadderKind raiser, bool fault_inject) {
    double worst = 0.0;
    for (const auto& f : test_family_set()) {
        DeformedLadder l(lower, f, kCutoff);
        DeformedLadder r(raiser, f, kCutoff);
        if (fault_inject) {
            // hit both parity sectors
            l.perturb_strength(kCutoff / 2, 1e-6);
            l.perturb_strength(kCutoff / 2 + 1, 1e-6);
        }
        worst = std::max(worst,
                         algebra::commutator_deviation(l, r, algebra::dual_sector(lower, raiser)));
    }
    return worst;
}

double self_commutator_worst() {
    double worst = 0.0;
    for (const auto& f : test_family_set()) {
        for (LadderKind kind : {LadderKind::A, LadderKind::B, LadderKind::C, LadderKind::B0,
                                LadderKind::B1}) {
            worst = std::max(worst, algebra::self_commutator_deviation(DeformedLadder(kind, f, kCutoff)));
        }
    }
    return worst;
}

double number_commutator_worst() {
    double worst = 0.0;
    for (const auto& f : test_family_set()) {
        for (LadderKind kind : {LadderKind::A, LadderKind::B, LadderKind::C, LadderKind::B0,
                                LadderKind::B1}) {
            worst = std::max(worst,
                             algebra::number_commutator_deviation(DeformedLadder(kind, f, kCutoff)));
        }
    }
    return worst;
}

double cross_check_worst() {
    double worst = 0.0;
    for (LadderKind kind : {LadderKind::A, LadderKind::B, LadderKind::C, LadderKind::B0,
                            LadderKind::B1}) {
        engine::PumpConfig config;
        config.kind = kind;
        config.f = NonlinearityFn::inverse_sqrt();
        config.g_tau = 0.3;
        config.atoms = 10;
        config.atom = engine::AtomPreparation(0.6, 0.4, std::sqrt(0.24), 0.7);
        config.cutoff = 16;
        config.method = engine::StepMethod::Both;
        config.leak_budget = 1.0;   // truncation is fine here; both paths share it
        const auto result = engine::run_pumping(config);
        worst = std::max(worst, result.max_path_deviation);
    }
    return worst;
}

double displacement_worst() {
    using states::DisplacementPair;
    using states::FamilyTag;
    const int cutoff = 48;
    const std::complex<double> z(0.3, 0.2);
    const auto f = NonlinearityFn::inverse_sqrt();
    const auto seed0 = states::PureState::vacuum(cutoff);
    const auto seed1 = states::PureState::fock(1, cutoff);

    const std::pair<DisplacementPair, FamilyTag> pairs[] = {
        {DisplacementPair::DF, FamilyTag::Nlcs},
        {DisplacementPair::DFPrime, FamilyTag::NlcsDual},
        {DisplacementPair::D0, FamilyTag::SqVac},
        {DisplacementPair::D1, FamilyTag::SqFirst},
    };
    double worst = 0.0;
    for (const auto& [pair, tag] : pairs) {
        const auto& seed = pair == DisplacementPair::D1 ? seed1 : seed0;
        const auto displaced = states::displacement_apply(pair, f, z, seed, cutoff);
        const auto built = states::build_state({tag, f, z}, cutoff);
        worst = std::max(worst, 1.0 - analysis::fidelity_pure(displaced, built));
    }
    return worst;
}

double eigenrelation_worst() {
    using states::FamilyTag;
    const int cutoff = 48;
    const std::complex<double> z(0.3, 0.0);
    const auto f = NonlinearityFn::inverse_sqrt();

    const std::pair<LadderKind, FamilyTag> pairs[] = {
        {LadderKind::A, FamilyTag::Nlcs},     {LadderKind::B, FamilyTag::NlcsDual},
        {LadderKind::B0, FamilyTag::SqVac},   {LadderKind::B1, FamilyTag::SqFirst},
        {LadderKind::C, FamilyTag::EvenNlcs}, {LadderKind::C, FamilyTag::OddNlcs},
    };
    double worst = 0.0;
    for (const auto& [kind, tag] : pairs) {
        const auto state = states::build_state({tag, f, z}, cutoff, 1e-12);
        worst = std::max(worst, states::eigenrelation_residual(kind, state, z, f));
    }
    return worst;
}

double convergence_bound_worst() {
    using states::FamilyTag;
    struct Case {
        FamilyTag tag;
        NonlinearityFn f;
        double expect;   // +inf means "must report unbounded"
    };
    const Case cases[] = {
        {FamilyTag::Nlcs, NonlinearityFn::inverse_sqrt(), 1.0},
        {FamilyTag::Nlcs, NonlinearityFn::identity(), std::numeric_limits<double>::infinity()},
        {FamilyTag::NlcsDual, NonlinearityFn::inverse_sqrt(),
         std::numeric_limits<double>::infinity()},
        {FamilyTag::SqVac, NonlinearityFn::identity(), 0.25},
    };
    double worst = 0.0;
    for (const auto& c : cases) {
        const double bound = states::convergence_bound(c.tag, c.f);
        if (std::isinf(c.expect)) {
            worst = std::max(worst, std::isinf(bound) ? 0.0 : 1.0);
        } else {
            worst = std::max(worst, std::abs(bound - c.expect) / c.expect);
        }
    }
    return worst;
}

} // namespace

std::vector<CheckRow> run_all(bool fault_inject) {
    std::vector<CheckRow> rows;
    auto add = [&rows](std::string name, double value, double threshold) {
        rows.push_back({std::move(name), value, threshold, value <= threshold});
    };

    add("algebra/self-commutators", self_commutator_worst(), 1e-12);
    add("algebra/number-commutators", number_commutator_worst(), 1e-12);
    add("algebra/duality [A,B+]=1", duality_deviation(LadderKind::A, LadderKind::B, fault_inject),
        1e-12);
    add("algebra/duality [B,A+]=1", duality_deviation(LadderKind::B, LadderKind::A, fault_inject),
        1e-12);
    add("algebra/duality [C,B0+]=1 (even)",
        duality_deviation(LadderKind::C, LadderKind::B0, fault_inject), 1e-12);
    add("algebra/duality [C,B1+]=1 (odd)",
        duality_deviation(LadderKind::C, LadderKind::B1, fault_inject), 1e-12);
    add("engine/recursion-vs-unitary", cross_check_worst(), 1e-10);
    add("states/displacement-vs-series", displacement_worst(), 1e-10);
    add("states/eigenrelation-residuals", eigenrelation_worst(), 1e-10);
    add("states/convergence-bounds", convergence_bound_worst(), 0.01);
    return rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
    for (const auto& row : rows) {
        if (!row.pass) return false;
    }
    return true;
}

void print_table(const std::vector<CheckRow>& rows, std::ostream& os) {
    for (const auto& row : rows) {
        os << (row.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(38) << row.name
           << " value " << std::scientific << std::setprecision(3) << row.value << "  (limit "
           << row.threshold << ")\n";
    }
}

} // namespace masersim::verify
