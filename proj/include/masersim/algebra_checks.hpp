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

#include "masersim/ladder.hpp"

namespace masersim::algebra {

/// Fock-space sector a commutator identity is restricted to. The two-photon
/// conjugate pairs (C,B0) and (C,B1) close only on one parity each.
enum class Sector { All, Even, Odd };

/// Canonical sector for a conjugate pair check: Even for (C,B0), Odd for
/// (C,B1), All otherwise.
Sector dual_sector(LadderKind lower, LadderKind raise_conjugate_of);

/**
 * max |<n|[L, R^+]|n'> - delta_nn'| over the interior block n,n' <=
 * cutoff - step, optionally restricted to one parity sector. Finite matrices
 * cannot satisfy the identity at the truncation boundary, so those rows are
 * excluded. Both ladders must share step and cutoff, with cutoff >= 2*step.
 */
double commutator_deviation(const DeformedLadder& lower, const DeformedLadder& raise_conjugate_of,
                            Sector sector);

/// Same check built from (kind, f) with the canonical sector for the pair.
double commutator_deviation(LadderKind lower, LadderKind raise_conjugate_of,
                            const NonlinearityFn& f, int cutoff);

/// max deviation of [L, L^+]|n> from (lambda(n+s) - lambda(n))|n> on the
/// interior block, relative to max(1, lambda(n+s)): fast-growing
/// deformations push the strengths to 1e6 and beyond, where an absolute
/// machine-precision bound would be meaningless.
double self_commutator_deviation(const DeformedLadder& ladder);

/// max deviation of [N, L] from -s*L and [N, L^+] from +s*L^+ on the
/// interior block, relative to the same local scale.
double number_commutator_deviation(const DeformedLadder& ladder);

} // namespace masersim::algebra
