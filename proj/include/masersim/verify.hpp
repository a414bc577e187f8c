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

#include <iosfwd>
#include <string>
#include <vector>

namespace masersim::verify {

struct CheckRow {
    std::string name;
    double value;       // measured deviation / worst case
    double threshold;   // pass when value <= threshold
    bool pass;
};

/**
 * The full invariant suite: algebra identities, conjugate-pair commutators,
 * recursion-vs-unitary cross-check, displacement-vs-series equivalence,
 * eigenrelation residuals and convergence-bound spot values. With
 * fault_inject the conjugate-pair strength tables are perturbed by 1e-6,
 * which must make the duality rows fail (a sensitivity self-test).
 */
std::vector<CheckRow> run_all(bool fault_inject = false);

bool all_pass(const std::vector<CheckRow>& rows);
void print_table(const std::vector<CheckRow>& rows, std::ostream& os);

} // namespace masersim::verify
