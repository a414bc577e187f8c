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

#include "masersim/field_state.hpp"
#include "masersim/pure_state.hpp"

namespace masersim::analysis {

struct ObservableSet {
    double mean_n;
    double var_n;
    double mandel_q;             // var/mean - 1; 0 when the field is empty
    double purity;               // tr(rho^2)
    double parity_even_weight;   // fraction of population on even n
    double max_offdiag;
};

/// <psi|rho|psi>. Cutoff mismatches are fine: the missing components of the
/// shorter operand contribute nothing.
double fidelity(const engine::FieldState& rho, const states::PureState& target);

/// |<a|b>|^2 for two pure states (over their common range).
double fidelity_pure(const states::PureState& a, const states::PureState& b);

ObservableSet observables(const engine::FieldState& state);

} // namespace masersim::analysis
