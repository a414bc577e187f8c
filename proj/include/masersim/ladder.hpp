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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "masersim/nonlinearity.hpp"

namespace masersim::algebra {

/**
 * The five deformed lowering-operator families.
 *
 * Each kind lowers the photon number by a fixed step s and is fully
 * described by its strength table lambda(n):
 *
 *   A  (s=1):  lambda(n) = n f^2(n)                  a f(N)
 *   B  (s=1):  lambda(n) = n / f^2(n)                a / f(N), conjugate of A
 *   C  (s=2):  lambda(n) = n(n-1) f^2(n)             a^2 f(N)
 *   B0 (s=2):  lambda(n) = n / (4(n-1) f^2(n))       even-sector conjugate of C
 *   B1 (s=2):  lambda(n) = (n-1) / (4n f^2(n))       odd-sector conjugate of C
 *
 * with lambda(n) = 0 for n < s (and the B0 table set to 0 at n = 1, where
 * the defining formula divides by n-1 but the even sector never reaches).
 */
enum class LadderKind { A, B, C, B0, B1 };

int step_of(LadderKind kind);
std::string to_string(LadderKind kind);
LadderKind parse_ladder_kind(const std::string& name);

/// lambda(n) for the given kind and nonlinearity; exactly 0 below the step.
double ladder_strength(LadderKind kind, const NonlinearityFn& f, int n);

/**
 * A lowering operator on the truncated Fock space 0..cutoff, stored as its
 * strength table. The matrix action is <n-s|L|n> = sqrt(lambda(n)).
 * Immutable after construction except for the fault-injection hook.
 */
class DeformedLadder {
  public:
    DeformedLadder(LadderKind kind, const NonlinearityFn& f, int cutoff);

    LadderKind kind() const { return kind_; }
    int step() const { return step_; }
    int cutoff() const { return cutoff_; }

    double strength(int n) const;
    std::span<const double> strengths() const { return lambda_; }

    /// (cutoff+1)^2 lowering matrix; requires cutoff >= step.
    Eigen::MatrixXd lowering_matrix() const;
    /// Transpose of the lowering matrix (entries are real).
    Eigen::MatrixXd raising_matrix() const;

    /// Banded application of L / L^dagger to a state vector.
    Eigen::VectorXcd apply_lowering(const Eigen::VectorXcd& v) const;
    Eigen::VectorXcd apply_raising(const Eigen::VectorXcd& v) const;

    /// Fault-injection hook for the verification suite: adds delta to
    /// lambda(n), deliberately breaking the algebra.
    void perturb_strength(int n, double delta);

  private:
    LadderKind kind_;
    int step_;
    int cutoff_;
    std::vector<double> lambda_;
};

/// Convenience for the (kind, f, cutoff) triple; throws if cutoff < step.
Eigen::MatrixXd ladder_matrix(LadderKind kind, const NonlinearityFn& f, int cutoff);

} // namespace masersim::algebra
