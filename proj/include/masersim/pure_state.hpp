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

#include <Eigen/Dense>

namespace masersim::states {

/// Default ceiling on the truncated-tail weight, as a fraction of the total
/// norm. Keeps truncation error far below every tolerance used downstream.
inline constexpr double kDefaultTailTolerance = 1e-14;

/**
 * Normalized state vector on the truncated Fock space 0..cutoff, together
 * with an upper bound on the squared norm of the discarded tail (relative
 * to the untruncated total). Construction fails when the bound exceeds the
 * tolerance, so a successfully built state is trustworthy at its cutoff.
 */
class PureState {
  public:
    PureState(Eigen::VectorXcd unnormalized_amps, double tail_bound,
              double tail_tolerance = kDefaultTailTolerance);

    static PureState fock(int n, int cutoff);
    static PureState vacuum(int cutoff) { return fock(0, cutoff); }

    int cutoff() const { return static_cast<int>(amps_.size()) - 1; }
    const Eigen::VectorXcd& amps() const { return amps_; }
    std::complex<double> amp(int n) const { return amps_[n]; }
    double tail_bound() const { return tail_bound_; }

  private:
    Eigen::VectorXcd amps_;
    double tail_bound_;
};

/**
 * Geometric tail bound for a truncated amplitude vector whose magnitudes
 * decay along arithmetic index chains of the given step. Uses the worst of
 * the topmost squared-magnitude ratios per chain; throws std::runtime_error
 * if the terms are still growing at the cutoff (insufficient cutoff or a
 * divergent series). Returns the bound relative to the total weight.
 */
double tail_bound_from_amps(const Eigen::VectorXcd& amps, int step);

} // namespace masersim::states
