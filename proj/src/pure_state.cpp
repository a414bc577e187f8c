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

#include "masersim/pure_state.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace masersim::states {

namespace {

std::string sci(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", value);
    return buf;
}

} // namespace

PureState::PureState(Eigen::VectorXcd unnormalized_amps, double tail_bound, double tail_tolerance)
    : amps_(std::move(unnormalized_amps)), tail_bound_(tail_bound) {
    if (amps_.size() < 1) {
        throw std::invalid_argument("state needs at least one amplitude");
    }
    if (!(tail_bound >= 0.0)) {
        throw std::invalid_argument("tail bound must be non-negative");
    }
    if (tail_bound > tail_tolerance) {
        throw std::runtime_error("truncated tail " + sci(tail_bound) + " exceeds tolerance " +
                                 sci(tail_tolerance) + "; increase the cutoff");
    }
    const double norm = amps_.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("state has zero or non-finite norm");
    }
    amps_ /= norm;
}

PureState PureState::fock(int n, int cutoff) {
    if (cutoff < 0 || n < 0 || n > cutoff) {
        throw std::invalid_argument("fock state index out of range");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(cutoff + 1);
    amps[n] = 1.0;
    return PureState(std::move(amps), 0.0);
}

double tail_bound_from_amps(const Eigen::VectorXcd& amps, int step) {
    if (step < 1) {
        throw std::invalid_argument("tail bound needs step >= 1");
    }
    const int size = static_cast<int>(amps.size());
    double total = 0.0;
    for (int n = 0; n < size; ++n) total += std::norm(amps[n]);
    if (total == 0.0) {
        throw std::invalid_argument("tail bound of a zero vector");
    }

    double tail = 0.0;
    for (int base = 0; base < step && base < size; ++base) {
        // walk the chain base, base+step, ... and look at its top
        int top = size - 1 - ((size - 1 - base) % step);
        if (std::norm(amps[top]) == 0.0) continue;   // support ends inside the range
        const double t0 = std::norm(amps[top]);
        if (top - step < 0) {
            throw std::runtime_error("cutoff too small to bound the truncated tail");
        }
        const double t1 = std::norm(amps[top - step]);
        if (t1 == 0.0) {
            throw std::runtime_error("cannot bound tail: amplitude chain has a hole at the cutoff");
        }
        double ratio = t0 / t1;
        if (top - 2 * step >= 0) {
            const double t2 = std::norm(amps[top - 2 * step]);
            if (t2 > 0.0) ratio = std::max(ratio, t1 / t2);
        }
        if (!(ratio < 1.0)) {
            throw std::runtime_error("series terms still growing at the cutoff; increase it");
        }
        tail += t0 * ratio / (1.0 - ratio);
    }
    return tail / (total + tail);
}

} // namespace masersim::states
