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

#include "masersim/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "masersim/analysis.hpp"
#include "masersim/approx.hpp"

namespace masersim::cli {

namespace {

using nlohmann::json;

engine::AtomPreparation parse_atom(const json& j) {
    const double rho_aa = j.at("rho_aa").get<double>();
    const double rho_bb = j.contains("rho_bb") ? j.at("rho_bb").get<double>() : 1.0 - rho_aa;
    const double coh_mag = j.value("coh_mag", 0.0);
    const double phi = j.value("phi", 0.0);
    return {rho_aa, rho_bb, coh_mag, phi};
}

engine::StepMethod parse_method(const std::string& name) {
    if (name == "recursion") return engine::StepMethod::Recursion;
    if (name == "unitary") return engine::StepMethod::Unitary;
    if (name == "both") return engine::StepMethod::Both;
    throw std::invalid_argument("unknown step method '" + name + "'");
}

states::PureState make_initial(const std::string& spec, int cutoff) {
    if (spec == "vacuum") return states::PureState::vacuum(cutoff);
    if (spec.rfind("fock:", 0) == 0) {
        const int n = std::stoi(spec.substr(5));
        return states::PureState::fock(n, cutoff);
    }
    throw std::invalid_argument("unknown initial state '" + spec + "' (vacuum or fock:<n>)");
}

json observables_json(const engine::FieldState& state) {
    const analysis::ObservableSet obs = analysis::observables(state);
    return json{{"trace", state.trace()},
                {"leakage", state.leakage()},
                {"purity", obs.purity},
                {"mean_n", obs.mean_n},
                {"var_n", obs.var_n},
                {"mandel_q", obs.mandel_q},
                {"parity_even_weight", obs.parity_even_weight},
                {"max_offdiag", obs.max_offdiag}};
}

} // namespace

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

ExperimentConfig ExperimentConfig::parse_json_text(const std::string& text) {
    const json j = json::parse(text);
    ExperimentConfig config;

    config.base.kind = algebra::parse_ladder_kind(j.value("kind", "A"));
    config.base.f = algebra::NonlinearityFn::parse(j.value("f", "identity"));
    config.base.g_tau = j.value("g_tau", 0.0);
    config.base.atoms = j.value("atoms", 0);
    if (j.contains("atom")) config.base.atom = parse_atom(j.at("atom"));
    config.base.cutoff = j.value("cutoff", 32);
    config.base.free_phase = j.value("free_phase", 0.0);
    config.base.method = parse_method(j.value("method", "recursion"));
    config.base.leak_budget = j.value("leak_budget", 1e-8);
    config.initial_spec = j.value("initial", "vacuum");

    if (j.contains("target") && !j.at("target").is_null()) {
        TargetSpec target{states::parse_family_tag(j.at("target").at("family").get<std::string>()),
                          std::nullopt};
        if (j.at("target").contains("z")) {
            const auto& z = j.at("target").at("z");
            target.z = std::complex<double>(z.at(0).get<double>(), z.at(1).get<double>());
        }
        config.target = target;
    }

    if (j.contains("sweep")) {
        const auto& sweep = j.at("sweep");
        if (sweep.contains("g_tau")) config.sweep.g_tau = sweep.at("g_tau").get<std::vector<double>>();
        if (sweep.contains("atoms")) config.sweep.atoms = sweep.at("atoms").get<std::vector<int>>();
        if (sweep.contains("f")) config.sweep.f_names = sweep.at("f").get<std::vector<std::string>>();
        if (sweep.contains("kind")) config.sweep.kinds = sweep.at("kind").get<std::vector<std::string>>();
    }
    config.max_runs = j.value("max_runs", std::size_t{10000});

    config.validate();
    return config;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

std::size_t ExperimentConfig::validate() const {
    const std::size_t points = std::max<std::size_t>(sweep.g_tau.size(), 1) *
                               std::max<std::size_t>(sweep.atoms.size(), 1) *
                               std::max<std::size_t>(sweep.f_names.size(), 1) *
                               std::max<std::size_t>(sweep.kinds.size(), 1);
    if (points > max_runs) {
        throw std::invalid_argument("sweep cross product has " + std::to_string(points) +
                                    " points, above the limit of " + std::to_string(max_runs));
    }
    // Parse errors in swept names should surface at config time, not mid-sweep.
    for (const auto& name : sweep.f_names) (void)algebra::NonlinearityFn::parse(name);
    std::vector<algebra::LadderKind> kinds{base.kind};
    if (!sweep.kinds.empty()) {
        kinds.clear();
        for (const auto& name : sweep.kinds) kinds.push_back(algebra::parse_ladder_kind(name));
    }
    if (target) {
        for (const auto kind : kinds) {
            if (states::family_step(target->family) != algebra::step_of(kind)) {
                throw std::invalid_argument("target family " + states::to_string(target->family) +
                                            " has step " +
                                            std::to_string(states::family_step(target->family)) +
                                            " but kind " + algebra::to_string(kind) + " has step " +
                                            std::to_string(algebra::step_of(kind)));
            }
        }
    }
    (void)make_initial(initial_spec, base.cutoff);
    return points;
}

void write_state_csv(const states::PureState& state, std::ostream& os) {
    os << "n,re,im,probability\n";
    for (int n = 0; n <= state.cutoff(); ++n) {
        const std::complex<double> amp = state.amp(n);
        os << n << ',' << format_g17(amp.real()) << ',' << format_g17(amp.imag()) << ','
           << format_g17(std::norm(amp)) << '\n';
    }
}

void write_records_csv(const std::vector<engine::RunRecord>& records, bool has_target,
                       std::ostream& os) {
    os << "k,trace,leakage,purity,mean_n,var_n,mandel_q,max_offdiag";
    if (has_target) os << ",fidelity_target";
    os << '\n';
    for (const auto& r : records) {
        os << r.k << ',' << format_g17(r.trace) << ',' << format_g17(r.leakage) << ','
           << format_g17(r.purity) << ',' << format_g17(r.mean_n) << ',' << format_g17(r.var_n)
           << ',' << format_g17(r.mandel_q) << ',' << format_g17(r.max_offdiag);
        if (has_target) {
            os << ',' << format_g17(r.fidelity_target.value_or(0.0));
        }
        os << '\n';
    }
}

namespace {

struct SweepPoint {
    engine::PumpConfig config;
    std::string kind_name;
    std::string f_name;
};

std::vector<SweepPoint> expand_sweep(const ExperimentConfig& experiment) {
    const auto& sweep = experiment.sweep;
    const std::vector<std::string> kinds =
        sweep.kinds.empty() ? std::vector<std::string>{algebra::to_string(experiment.base.kind)}
                            : sweep.kinds;
    const std::vector<std::string> fs =
        sweep.f_names.empty() ? std::vector<std::string>{experiment.base.f.name()} : sweep.f_names;
    const std::vector<double> g_taus =
        sweep.g_tau.empty() ? std::vector<double>{experiment.base.g_tau} : sweep.g_tau;
    const std::vector<int> atom_counts =
        sweep.atoms.empty() ? std::vector<int>{experiment.base.atoms} : sweep.atoms;

    std::vector<SweepPoint> points;
    for (const auto& kind : kinds) {
        for (const auto& f : fs) {
            for (const double g_tau : g_taus) {
                for (const int atoms : atom_counts) {
                    SweepPoint point{experiment.base, kind, f};
                    point.config.kind = algebra::parse_ladder_kind(kind);
                    point.config.f = algebra::NonlinearityFn::parse(f);
                    point.config.g_tau = g_tau;
                    point.config.atoms = atoms;
                    points.push_back(std::move(point));
                }
            }
        }
    }
    return points;
}

struct PointOutcome {
    json summary;
    std::string csv;
    std::string error;   // empty on success
};

PointOutcome run_point(const ExperimentConfig& experiment, const SweepPoint& point,
                       std::size_t index) {
    PointOutcome outcome;
    try {
        engine::PumpConfig config = point.config;
        config.initial = engine::FieldState::from_pure(
            make_initial(experiment.initial_spec, config.cutoff));

        std::optional<states::PureState> target_state;
        std::complex<double> z{};
        if (experiment.target) {
            z = experiment.target->z.value_or(engine::target_z(config));
            target_state = states::build_state(
                {experiment.target->family, config.f, z}, config.cutoff);
        }

        const engine::RunResult result =
            engine::run_pumping(config, target_state ? &*target_state : nullptr);

        std::ostringstream csv;
        write_records_csv(result.records, target_state.has_value(), csv);
        outcome.csv = csv.str();

        const analysis::ObservableSet obs = analysis::observables(result.final_state);
        const approx::WeakCouplingReport wc = approx::weak_coupling_check(config, obs.mean_n);

        json entry;
        entry["index"] = index;
        entry["kind"] = point.kind_name;
        entry["f"] = point.f_name;
        entry["g_tau"] = config.g_tau;
        entry["atoms"] = config.atoms;
        entry["final"] = observables_json(result.final_state);
        entry["weak_coupling"] = json{{"g_tau", wc.g_tau},
                                      {"nbar", wc.nbar},
                                      {"margin1", wc.margin1},
                                      {"margin2", wc.margin2},
                                      {"threshold", wc.threshold},
                                      {"pass", wc.pass}};
        if (target_state) {
            entry["target"] = json{{"family", states::to_string(experiment.target->family)},
                                   {"z_re", z.real()},
                                   {"z_im", z.imag()},
                                   {"fidelity", analysis::fidelity(result.final_state,
                                                                   *target_state)}};
        } else {
            entry["target"] = nullptr;
        }
        const int round_n = static_cast<int>(std::lround(obs.mean_n));
        if (config.atom.rho_bb > 0.0 && config.atoms >= 1) {
            entry["dominance_margin"] =
                approx::dominance_margin(round_n, round_n, config.atom.rho_bb, config.atoms);
        } else {
            entry["dominance_margin"] = nullptr;
        }
        outcome.summary = std::move(entry);
    } catch (const std::exception& err) {
        outcome.error = err.what();
    }
    return outcome;
}

} // namespace

int run_experiment(const ExperimentConfig& experiment, const std::string& out_dir,
                   std::ostream& log) {
    const std::size_t points_expected = experiment.validate();
    const std::vector<SweepPoint> points = expand_sweep(experiment);
    if (points.size() != points_expected) {
        throw std::logic_error("sweep expansion mismatch");
    }

    std::filesystem::create_directories(out_dir);
    std::vector<PointOutcome> outcomes(points.size());

    // Sweep points share nothing; run them in parallel and let a single
    // collector below write files in index order.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i) {
        outcomes[static_cast<std::size_t>(i)] =
            run_point(experiment, points[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
    }

    json summary;
    summary["runs"] = json::array();
    bool failed = false;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        auto& outcome = outcomes[i];
        if (!outcome.error.empty()) {
            log << "run " << i << " failed: " << outcome.error << '\n';
            failed = true;
            continue;
        }
        char name[32];
        std::snprintf(name, sizeof(name), "run_%04zu.csv", i);
        const std::filesystem::path csv_path = std::filesystem::path(out_dir) / name;
        std::ofstream csv(csv_path);
        if (!csv) {
            throw std::runtime_error("cannot write " + csv_path.string());
        }
        csv << outcome.csv;
        summary["runs"].push_back(std::move(outcome.summary));
    }

    const std::filesystem::path summary_path = std::filesystem::path(out_dir) / "summary.json";
    std::ofstream out(summary_path);
    if (!out) {
        throw std::runtime_error("cannot write " + summary_path.string());
    }
    out << summary.dump(2) << '\n';

    if (failed) {
        return 1;
    }
    log << "wrote " << outcomes.size() << " run(s) to " << out_dir << '\n';
    return 0;
}

} // namespace masersim::cli
