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

#include "masersim/ladder.hpp"

#include <cmath>
#include <stdexcept>

namespace masersim::algebra {

int step_of(LadderKind kind) {
    switch (kind) {
        case LadderKind::A:
        case LadderKind::B:
            return 1;
        case LadderKind::C:
        case LadderKind::B0:
        case LadderKind::B1:
            return 2;
    }
    throw std::logic_error("unreachable ladder kind");
}

std::string to_string(LadderKind kind) {
    switch (kind) {
        case LadderKind::A: return "A";
        case LadderKind::B: return "B";
        case LadderKind::C: return "C";
        case LadderKind::B0: return "B0";
        case LadderKind::B1: return "B1";
    }
    throw std::logic_error("unreachable ladder kind");
}

LadderKind parse_ladder_kind(const std::string& name) {
    if (name == "A") return LadderKind::A;
    if (name == "B") return LadderKind::B;
    if (name == "C") return LadderKind::C;
    if (name == "B0") return LadderKind::B0;
    if (name == "B1") return LadderKind::B1;
    throw std::invalid_argument("unknown ladder kind '" + name + "'");
}

double ladder_strength(LadderKind kind, const NonlinearityFn& f, int n) {
    if (n < 0) {
        throw std::invalid_argument("ladder strength evaluated at negative n");
    }
    const double dn = static_cast<double>(n);
    switch (kind) {
        case LadderKind::A: {
            if (n < 1) return 0.0;
            const double fn = f(n);
            return dn * fn * fn;
        }
        case LadderKind::B: {
            if (n < 1) return 0.0;
            const double fn = f(n);
            return dn / (fn * fn);
        }
        case LadderKind::C: {
            if (n < 2) return 0.0;
            const double fn = f(n);
            return dn * (dn - 1.0) * fn * fn;
        }
        case LadderKind::B0: {
            if (n < 2) return 0.0;
            const double fn = f(n);
            return 0.25 * dn / (dn - 1.0) / (fn * fn);
        }
        case LadderKind::B1: {
            if (n < 2) return 0.0;
            const double fn = f(n);
            return 0.25 * (dn - 1.0) / dn / (fn * fn);
        }
    }
    throw std::logic_error("unreachable ladder kind");
}

DeformedLadder::DeformedLadder(LadderKind kind, const NonlinearityFn& f, int cutoff)
    : kind_(kind), step_(step_of(kind)), cutoff_(cutoff) {
    if (cutoff < 0) {
        throw std::invalid_argument("ladder cutoff must be non-negative");
    }
    lambda_.resize(static_cast<std::size_t>(cutoff) + 1);
    for (int n = 0; n <= cutoff; ++n) {
        lambda_[static_cast<std::size_t>(n)] = ladder_strength(kind, f, n);
    }
}

double DeformedLadder::strength(int n) const {
    if (n < 0 || n > cutoff_) {
        throw std::out_of_range("ladder strength index out of range");
    }
    return lambda_[static_cast<std::size_t>(n)];
}

Eigen::MatrixXd DeformedLadder::lowering_matrix() const {
    if (cutoff_ < step_) {
        throw std::invalid_argument("ladder matrix needs cutoff >= step");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(cutoff_ + 1, cutoff_ + 1);
    for (int n = step_; n <= cutoff_; ++n) {
        m(n - step_, n) = std::sqrt(lambda_[static_cast<std::size_t>(n)]);
    }
    return m;
}

Eigen::MatrixXd DeformedLadder::raising_matrix() const {
    return lowering_matrix().transpose();
}

Eigen::VectorXcd DeformedLadder::apply_lowering(const Eigen::VectorXcd& v) const {
    if (v.size() != cutoff_ + 1) {
        throw std::invalid_argument("state size does not match ladder cutoff");
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (int n = step_; n <= cutoff_; ++n) {
        out[n - step_] = std::sqrt(lambda_[static_cast<std::size_t>(n)]) * v[n];
    }
    return out;
}

Eigen::VectorXcd DeformedLadder::apply_raising(const Eigen::VectorXcd& v) const {
    if (v.size() != cutoff_ + 1) {
        throw std::invalid_argument("state size does not match ladder cutoff");
    }
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(v.size());
    for (int n = step_; n <= cutoff_; ++n) {
        out[n] = std::sqrt(lambda_[static_cast<std::size_t>(n)]) * v[n - step_];
    }
    return out;
}

void DeformedLadder::perturb_strength(int n, double delta) {
    if (n < 0 || n > cutoff_) {
        throw std::out_of_range("perturbed index out of range");
    }
    lambda_[static_cast<std::size_t>(n)] += delta;
    if (lambda_[static_cast<std::size_t>(n)] < 0.0) {
        throw std::invalid_argument("perturbation made a strength negative");
    }
}

Eigen::MatrixXd ladder_matrix(LadderKind kind, const NonlinearityFn& f, int cutoff) {
    if (cutoff < step_of(kind)) {
        throw std::invalid_argument("ladder matrix needs cutoff >= step");
    }
    return DeformedLadder(kind, f, cutoff).lowering_matrix();
}

} // namespace masersim::algebra
