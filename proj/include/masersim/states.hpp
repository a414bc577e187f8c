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
#include <string>

#include "masersim/ladder.hpp"
#include "masersim/nonlinearity.hpp"
#include "masersim/pure_state.hpp"

namespace masersim::states {

using algebra::LadderKind;
using algebra::NonlinearityFn;

/**
 * The six analytic state families, by their unnormalized number-state
 * coefficients (f(n)! = f(1)...f(n), f(2m)!! = f(2)f(4)...f(2m),
 * f(2m+1)!! = f(3)f(5)...f(2m+1), empty products = 1):
 *
 *   Nlcs      c_n    = z^n / (sqrt(n!) f(n)!)            eigenstate of a f(N)
 *   NlcsDual  c_n    = z^n f(n)! / sqrt(n!)              eigenstate of a / f(N)
 *   SqVac     c_2m   = (z^m/m!) sqrt((2m)!) f(2m)!!      eigenstate of B0
 *   SqFirst   c_2m+1 = (z^m/m!) sqrt((2m+1)!) f(2m+1)!!  eigenstate of B1
 *   EvenNlcs  c_2m   = z^m / (sqrt((2m)!) f(2m)!!)       eigenstate of a^2 f(N)
 *   OddNlcs   c_2m+1 = z^m / (sqrt((2m+1)!) f(2m+1)!!)   eigenstate of a^2 f(N)
 */
enum class FamilyTag { Nlcs, NlcsDual, SqVac, SqFirst, EvenNlcs, OddNlcs };

std::string to_string(FamilyTag tag);
FamilyTag parse_family_tag(const std::string& name);

/// Photon-number step of the pumping process that generates the family.
int family_step(FamilyTag tag);

struct StateFamily {
    FamilyTag tag;
    NonlinearityFn f;
    std::complex<double> z;
};

/**
 * Builds the normalized truncated state. Coefficients are evaluated in
 * log-magnitude form with phase tracked separately, so factorials far past
 * the double-precision overflow point are safe. Throws std::domain_error
 * when |z|^2 falls outside the family's convergence disc and
 * std::runtime_error when the cutoff leaves too much tail.
 */
PureState build_state(const StateFamily& family, int cutoff,
                      double tail_tolerance = kDefaultTailTolerance);

/**
 * Convergence bound on |z|^2 for the family's normalization series, from
 * the term-ratio limit. Estimated numerically by sampling the bound
 * sequence at m = 1e3, 1e4, 1e5 and extrapolating; returns +infinity for
 * entire series. Tables carry no asymptotics and are rejected.
 */
double convergence_bound(FamilyTag tag, const NonlinearityFn& f);

/**
 * Displacement-operator constructions exp(z R - z* L) for the conjugate
 * pairs ([L, R] = 1 on the relevant sector):
 *
 *   DF       R = B^+,  L = A      -> Nlcs from |0>
 *   DFPrime  R = A^+,  L = B      -> NlcsDual from |0>
 *   D0       R = C^+,  L = B0     -> SqVac from |0>
 *   D1       R = C^+,  L = B1     -> SqFirst from |1>
 */
enum class DisplacementPair { DF, DFPrime, D0, D1 };

/**
 * Applies the displacement in its factored form
 * exp(-|z|^2/2) exp(z R) exp(-z* L), then normalizes. On a seed annihilated
 * by L this is the exact displaced state; other seeds are accepted but make
 * no equivalence claim against build_state.
 */
PureState displacement_apply(DisplacementPair pair, const NonlinearityFn& f,
                             std::complex<double> z, const PureState& seed, int cutoff,
                             double tail_tolerance = kDefaultTailTolerance);

/**
 * || L psi - z psi || over components n <= cutoff - step: how well the state
 * solves the lowering-operator eigenvalue problem away from the truncation
 * boundary.
 */
double eigenrelation_residual(LadderKind lower, const PureState& state,
                              std::complex<double> z, const NonlinearityFn& f);

} // namespace masersim::states
