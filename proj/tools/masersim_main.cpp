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

#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "masersim/experiment.hpp"
#include "masersim/verify.hpp"

namespace {

std::complex<double> parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return {std::stod(text), 0.0};
    }
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"micromaser pumping simulator for deformed-oscillator coherent states"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    auto* run = app.add_subcommand("run", "run the experiment described by a JSON config");
    run->add_option("--config", config_path, "experiment config (JSON)")->required();
    run->add_option("--out", out_dir, "output directory");

    bool fault_inject = false;
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--fault-inject", fault_inject,
                     "perturb a strength table; the duality rows must then fail");

    std::string family = "nlcs";
    std::string f_spec = "identity";
    std::string z_spec = "0";
    int cutoff = 32;
    std::string states_out = "-";
    auto* states_cmd = app.add_subcommand("states", "emit analytic state amplitudes as CSV");
    states_cmd->add_option("--family", family,
                           "nlcs|nlcs_dual|sq_vac|sq_first|even_nlcs|odd_nlcs");
    states_cmd->add_option("--f", f_spec, "nonlinearity (identity, inverse_sqrt, power:<p>, table:...)");
    states_cmd->add_option("--z", z_spec, "amplitude, '<re>' or '<re>,<im>'");
    states_cmd->add_option("--cutoff", cutoff, "Fock-space cutoff");
    states_cmd->add_option("--out", states_out, "output file, '-' for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const auto config = masersim::cli::ExperimentConfig::load(config_path);
            return masersim::cli::run_experiment(config, out_dir, std::cout);
        }
        if (verify->parsed()) {
            const auto rows = masersim::verify::run_all(fault_inject);
            masersim::verify::print_table(rows, std::cout);
            return masersim::verify::all_pass(rows) ? 0 : 1;
        }
        if (states_cmd->parsed()) {
            const masersim::states::StateFamily spec{
                masersim::states::parse_family_tag(family),
                masersim::algebra::NonlinearityFn::parse(f_spec), parse_complex(z_spec)};
            const auto state = masersim::states::build_state(spec, cutoff);
            if (states_out == "-") {
                masersim::cli::write_state_csv(state, std::cout);
            } else {
                std::ofstream out(states_out);
                if (!out) {
                    throw std::runtime_error("cannot write " + states_out);
                }
                masersim::cli::write_state_csv(state, out);
            }
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
