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

#include "masersim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace masersim::analysis {

double fidelity(const engine::FieldState& rho, const states::PureState& target) {
    const int n = std::min(rho.cutoff(), target.cutoff()) + 1;
    const auto psi = target.amps().head(n);
    const std::complex<double> val = psi.adjoint() * rho.rho().topLeftCorner(n, n) * psi;
    return val.real();
}

double fidelity_pure(const states::PureState& a, const states::PureState& b) {
    const int n = std::min(a.cutoff(), b.cutoff()) + 1;
    const std::complex<double> overlap = a.amps().head(n).adjoint() * b.amps().head(n);
    return std::norm(overlap);
}

ObservableSet observables(const engine::FieldState& state) {
    const Eigen::MatrixXcd& rho = state.rho();
    const int size = static_cast<int>(rho.rows());

    double trace = 0.0;
    double mean = 0.0;
    double second = 0.0;
    double even = 0.0;
    for (int n = 0; n < size; ++n) {
        const double p = rho(n, n).real();
        trace += p;
        mean += n * p;
        second += static_cast<double>(n) * n * p;
        if (n % 2 == 0) even += p;
    }
    const double var = second - mean * mean;

    double max_off = 0.0;
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            if (n != m) max_off = std::max(max_off, std::abs(rho(n, m)));
        }
    }

    ObservableSet out{};
    out.mean_n = mean;
    out.var_n = var;
    out.mandel_q = (mean < 1e-14) ? 0.0 : var / mean - 1.0;
    out.purity = rho.squaredNorm();   // = tr(rho^2) for Hermitian rho
    out.parity_even_weight = (trace > 0.0) ? even / trace : 0.0;
    out.max_offdiag = max_off;
    return out;
}

} // namespace masersim::analysis
