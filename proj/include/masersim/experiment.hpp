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
#include <optional>
#include <string>
#include <vector>

#include "masersim/engine.hpp"
#include "masersim/states.hpp"

namespace masersim::cli {

/// Analytic state the run should converge to. z defaults to the
/// weak-coupling drive amplitude of the resolved pump parameters.
struct TargetSpec {
    states::FamilyTag family;
    std::optional<std::complex<double>> z;
};

/// Axes swept as a cross product; empty axes keep the base value.
struct SweepAxes {
    std::vector<double> g_tau;
    std::vector<int> atoms;
    std::vector<std::string> f_names;
    std::vector<std::string> kinds;
};

/**
 * One experiment: a base pump configuration, an optional convergence target
 * and optional sweep axes. Parsed from a single JSON document; all physical
 * quantities are dimensionless (the coupling and transit time only ever
 * appear as the product g_tau).
 */
struct ExperimentConfig {
    engine::PumpConfig base;
    std::string initial_spec = "vacuum";   // "vacuum" or "fock:<n>"
    std::optional<TargetSpec> target;
    SweepAxes sweep;
    std::size_t max_runs = 10000;

    static ExperimentConfig load(const std::string& path);
    static ExperimentConfig parse_json_text(const std::string& text);

    /// Number of sweep points; throws when it exceeds max_runs or a target
    /// family's step does not match the Hamiltonian kind's step.
    std::size_t validate() const;
};

/**
 * Runs every sweep point (points are independent and run in parallel),
 * writes run_<index>.csv per point plus one summary.json, all with
 * 17-significant-digit numbers so identical configs give bit-identical
 * files. Returns a process exit status: 0 on success.
 */
int run_experiment(const ExperimentConfig& config, const std::string& out_dir, std::ostream& log);

/// "%.17g" — the round-trippable numeric format used in all output files.
std::string format_g17(double value);

void write_state_csv(const states::PureState& state, std::ostream& os);
void write_records_csv(const std::vector<engine::RunRecord>& records, bool has_target,
                       std::ostream& os);

} // namespace masersim::cli
