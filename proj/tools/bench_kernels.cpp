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

// Times the OpenMP step kernels against the serial reference, plus the
// joint-unitary oracle path for scale. Wall-clock medians over repeated
// single-atom steps on a spread-out density matrix.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "masersim/engine.hpp"

using namespace masersim;
using Clock = std::chrono::steady_clock;

namespace {

engine::FieldState spread_state(int cutoff) {
    Eigen::VectorXcd amps(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) {
        amps[n] = std::complex<double>(1.0 / (1.0 + n), 0.5 / (1.0 + n * n));
    }
    amps /= amps.norm();
    return engine::FieldState::from_density(amps * amps.adjoint());
}

template <typename Fn>
double median_seconds(int reps, const Fn& fn) {
    std::vector<double> times;
    times.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        const auto begin = Clock::now();
        fn();
        const auto end = Clock::now();
        times.push_back(std::chrono::duration<double>(end - begin).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace

int main() {
    const auto f = algebra::NonlinearityFn::inverse_sqrt();
    const auto atom = engine::AtomPreparation(0.6, 0.4, std::sqrt(0.24), 0.7);
    const double g_tau = 0.05;

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%8s %14s %14s %9s %14s\n", "cutoff", "serial [ms]", "openmp [ms]", "speedup",
                "unitary [ms]");

    for (const int cutoff : {64, 128, 256, 512, 1024}) {
        const engine::TrigTables tables(algebra::LadderKind::A, f, g_tau, cutoff);
        const engine::FieldState state = spread_state(cutoff);
        Eigen::MatrixXcd out(cutoff + 1, cutoff + 1);

        const int reps = cutoff >= 512 ? 5 : 20;
        const double serial = median_seconds(reps, [&] {
            engine::kernels::recursion_step_serial(tables, atom, state.rho(), out);
        });
        const double parallel = median_seconds(reps, [&] {
            engine::kernels::recursion_step_openmp(tables, atom, state.rho(), out);
        });

        double unitary = -1.0;
        if (cutoff <= 256) {
            unitary = median_seconds(5, [&] {
                (void)engine::step_atom_unitary(state, atom, algebra::LadderKind::A, f, g_tau);
            });
        }

        if (unitary >= 0.0) {
            std::printf("%8d %14.3f %14.3f %9.2f %14.3f\n", cutoff, serial * 1e3, parallel * 1e3,
                        serial / parallel, unitary * 1e3);
        } else {
            std::printf("%8d %14.3f %14.3f %9.2f %14s\n", cutoff, serial * 1e3, parallel * 1e3,
                        serial / parallel, "-");
        }
    }
    return 0;
}
