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

#include "masersim/algebra_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace masersim::algebra {

namespace {

bool in_sector(int n, Sector sector) {
    switch (sector) {
        case Sector::All: return true;
        case Sector::Even: return n % 2 == 0;
        case Sector::Odd: return n % 2 == 1;
    }
    return false;
}

} // namespace

Sector dual_sector(LadderKind lower, LadderKind raise_conjugate_of) {
    if (lower == LadderKind::C && raise_conjugate_of == LadderKind::B0) return Sector::Even;
    if (lower == LadderKind::C && raise_conjugate_of == LadderKind::B1) return Sector::Odd;
    return Sector::All;
}

double commutator_deviation(const DeformedLadder& lower, const DeformedLadder& raise_conjugate_of,
                            Sector sector) {
    if (lower.step() != raise_conjugate_of.step()) {
        throw std::invalid_argument("commutator check needs ladders of equal step");
    }
    if (lower.cutoff() != raise_conjugate_of.cutoff()) {
        throw std::invalid_argument("commutator check needs ladders of equal cutoff");
    }
    const int s = lower.step();
    const int cutoff = lower.cutoff();
    if (cutoff < 2 * s) {
        throw std::invalid_argument("commutator check needs cutoff >= 2*step");
    }
    const Eigen::MatrixXd l = lower.lowering_matrix();
    const Eigen::MatrixXd r = raise_conjugate_of.raising_matrix();
    const Eigen::MatrixXd comm = l * r - r * l;

    const int interior = cutoff - s;
    double dev = 0.0;
    for (int n = 0; n <= interior; ++n) {
        if (!in_sector(n, sector)) continue;
        for (int m = 0; m <= interior; ++m) {
            if (!in_sector(m, sector)) continue;
            const double expect = (n == m) ? 1.0 : 0.0;
            dev = std::max(dev, std::abs(comm(n, m) - expect));
        }
    }
    return dev;
}

double commutator_deviation(LadderKind lower, LadderKind raise_conjugate_of,
                            const NonlinearityFn& f, int cutoff) {
    const DeformedLadder l(lower, f, cutoff);
    const DeformedLadder r(raise_conjugate_of, f, cutoff);
    return commutator_deviation(l, r, dual_sector(lower, raise_conjugate_of));
}

double self_commutator_deviation(const DeformedLadder& ladder) {
    const int s = ladder.step();
    const int cutoff = ladder.cutoff();
    if (cutoff < 2 * s) {
        throw std::invalid_argument("commutator check needs cutoff >= 2*step");
    }
    const Eigen::MatrixXd l = ladder.lowering_matrix();
    const Eigen::MatrixXd comm = l * l.transpose() - l.transpose() * l;

    const int interior = cutoff - s;
    double dev = 0.0;
    for (int n = 0; n <= interior; ++n) {
        for (int m = 0; m <= interior; ++m) {
            double expect = 0.0;
            double scale = 1.0;
            if (n == m) {
                // [L, L^+]|n> = (lambda(n+s) - lambda(n))|n> away from the boundary.
                // Fast-growing deformations make the products huge, so measure
                // relative to the strength entering them.
                expect = ladder.strength(n + s) - ladder.strength(n);
                scale = std::max(1.0, ladder.strength(n + s));
            }
            dev = std::max(dev, std::abs(comm(n, m) - expect) / scale);
        }
    }
    return dev;
}

double number_commutator_deviation(const DeformedLadder& ladder) {
    const int s = ladder.step();
    const int cutoff = ladder.cutoff();
    if (cutoff < 2 * s) {
        throw std::invalid_argument("commutator check needs cutoff >= 2*step");
    }
    const int dim = cutoff + 1;
    Eigen::MatrixXd num = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) num(n, n) = n;
    const Eigen::MatrixXd l = ladder.lowering_matrix();
    const Eigen::MatrixXd r = ladder.raising_matrix();

    const Eigen::MatrixXd lower_comm = num * l - l * num + s * l;   // [N,L] + sL = 0
    const Eigen::MatrixXd raise_comm = num * r - r * num - s * r;   // [N,L^+] - sL^+ = 0

    const int interior = cutoff - s;
    double dev = 0.0;
    for (int n = 0; n <= interior; ++n) {
        for (int m = 0; m <= interior; ++m) {
            // cancellations of entries ~ m*sqrt(lambda(m)); measure relative
            const double scale = std::max(1.0, m * std::abs(l(n, m)) + m * std::abs(r(n, m)));
            dev = std::max(dev, std::abs(lower_comm(n, m)) / scale);
            dev = std::max(dev, std::abs(raise_comm(n, m)) / scale);
        }
    }
    return dev;
}

} // namespace masersim::algebra
