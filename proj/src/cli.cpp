// SPDX-License-Identifier: Apache-2.0
//
// efa-relay: energy-flow-assisted amplify-and-forward relay optimization
// Copyright (C) 2026 The efa-relay authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "efa/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "efa/config.hpp"
#include "efa/errors.hpp"
#include "efa/experiments.hpp"
#include "efa/oracles.hpp"
#include "efa/siso.hpp"

namespace efa {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitComputation = 3;
constexpr int kExitVerification = 4;

struct GlobalOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    std::optional<std::size_t> trials;
    bool quiet = false;
};

RunConfig load_config(const GlobalOptions& opts) {
    RunConfig cfg;
    if (!opts.config_path.empty())
        cfg = parse_config(opts.config_path);
    if (opts.seed)
        cfg.master_seed = *opts.seed;
    if (opts.trials)
        cfg.n_trials = *opts.trials;
    if (!opts.out_path.empty())
        cfg.output = opts.out_path;
    return cfg;
}

void note(const GlobalOptions& opts, const std::string& text) {
    if (!opts.quiet)
        std::cerr << text << "\n";
}

int run_sweep_command(const GlobalOptions& opts, SweepFamily family) {
    RunConfig cfg;
    SweepSpec spec{};
    MonteCarloConfig mc;
    try {
        cfg = load_config(opts);
        if (cfg.family && *cfg.family != family) {
            std::cerr << "error: config is for family '" << family_name(*cfg.family)
                      << "' but the subcommand runs '" << family_name(family) << "'\n";
            return kExitConfig;
        }
        spec = build_sweep_spec(cfg, family);
        mc = build_mc_config(cfg);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (family == SweepFamily::rate_vs_rho && mc.n_trials != 1)
            note(opts, "note: rate_vs_rho uses a single channel realization; "
                       "n_trials is ignored");
        note(opts, "running " + std::string(family_name(family)) + ": " +
                       std::to_string(spec.sweep_values.size()) + " sweep points x " +
                       std::to_string(spec.variants.size()) + " variants, seed " +
                       std::to_string(mc.master_seed));
        const SweepResult result = run_sweep(spec, mc);
        emit_csv(result, cfg.output);
        note(opts, "wrote " + cfg.output);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitOk;
}

int run_verify_command(const GlobalOptions& opts) {
    RunConfig cfg;
    try {
        cfg = load_config(opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    std::vector<OracleReport> reports;
    try {
        reports = verify_suite(cfg.master_seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    bool all_passed = true;
    for (const OracleReport& r : reports) {
        all_passed = all_passed && r.passed;
        if (!opts.quiet)
            std::cout << (r.passed ? "[pass] " : "[FAIL] ") << r.name << "  instances="
                      << r.instances << "  worst_gap=" << r.worst_relative_gap
                      << "  tol=" << r.tolerance << "\n";
    }
    if (!opts.out_path.empty()) {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open '" << opts.out_path << "'\n";
            return kExitComputation;
        }
        out << reports_to_csv(reports);
    }
    return all_passed ? kExitOk : kExitVerification;
}

int run_optimize_command(const GlobalOptions& opts) {
    RunConfig cfg;
    try {
        cfg = load_config(opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    try {
        const Geometry geom(cfg.d_ds_m, cfg.ratio_dr);
        const PowerBudget pb(cfg.p_d_watts, cfg.p_s_watts);
        const NoiseModel noise(cfg.sigma_n_sq_watts);
        const Rng master(cfg.master_seed);
        const ChannelRealization ch = realize_channels(
            geom, cfg.antennas, master.substream(0, 0, 0), cfg.path_loss_exponent);

        std::cout << "seed: " << cfg.master_seed << "\nantennas: " << cfg.antennas
                  << "\nratio_dr: " << cfg.ratio_dr << "\n";
        if (cfg.antennas == 1) {
            const SisoChannel sc{ch.h_rs[0], ch.h_rd[0]};
            const SisoSolution sol = optimize_ps_closed_form(sc, pb, noise);
            std::cout << "ps_ratio: " << sol.ps_ratio << "\ngain_sq: " << sol.gain_sq
                      << "\nsnr: " << sol.snr << "\nrate_bits: " << sol.rate_bits << "\n";
            return kExitOk;
        }
        const std::vector<double> grid =
            make_ps_grid(cfg.ps_grid_start, cfg.ps_grid_step, cfg.ps_grid_stop);
        const std::vector<Variant> variants =
            cfg.variants.empty() ? std::vector<Variant>{Variant::efa} : cfg.variants;
        for (Variant v : variants) {
            const MimoScenario scn{ch, pb, noise, v};
            const MimoSolution sol = grid_search_ps(scn, grid);
            std::cout << "variant: " << variant_name(v) << "\n  ps_ratio: " << sol.ps_ratio
                      << "\n  snr: " << sol.snr << "\n  rate_bits: " << sol.rate_bits
                      << "\n";
            const DiagnosticsReport rep =
                diagnostics(sol.relay_matrix, ch, pb, sol.ps_ratio);
            std::cout << "  singular_values:";
            for (double s : rep.singular_values)
                std::cout << " " << s;
            std::cout << "\n  tx_alignment:";
            for (double s : rep.tx_alignment)
                std::cout << " " << s;
            std::cout << "\n  rx_signal_alignment:";
            for (double s : rep.rx_signal_alignment)
                std::cout << " " << s;
            std::cout << "\n  rx_leakage_alignment:";
            for (double s : rep.rx_leakage_alignment)
                std::cout << " " << s;
            std::cout << "\n";
        }
        return kExitOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Two-phase amplify-and-forward relay simulation with "
                 "destination-assisted wireless power transfer"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    GlobalOptions opts;
    std::uint64_t seed_value = 0;
    std::size_t trials_value = 0;
    app.add_option("--config", opts.config_path, "Scenario config file (JSON)");
    auto* seed_opt = app.add_option("--seed", seed_value, "Master seed override");
    app.add_option("--out", opts.out_path, "Output file override");
    auto* trials_opt = app.add_option("--trials", trials_value, "Trial count override");
    app.add_flag("--quiet", opts.quiet, "Suppress progress notes");

    auto* cmd_optimize =
        app.add_subcommand("optimize", "Solve one channel realization and print the design");
    auto* cmd_rho = app.add_subcommand("sweep-rho", "Rate against the power-splitting ratio");
    auto* cmd_ant = app.add_subcommand("sweep-antennas", "Average rate against antenna count");
    auto* cmd_dsiso =
        app.add_subcommand("sweep-distance-siso", "Average rate against relay position (r = 1)");
    auto* cmd_dmimo =
        app.add_subcommand("sweep-distance-mimo", "Average rate against relay position");
    auto* cmd_verify = app.add_subcommand("verify", "Run the brute-force oracle suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return kExitUsage;
    }

    if (seed_opt->count() > 0)
        opts.seed = seed_value;
    if (trials_opt->count() > 0)
        opts.trials = trials_value;

    if (cmd_optimize->parsed())
        return run_optimize_command(opts);
    if (cmd_rho->parsed())
        return run_sweep_command(opts, SweepFamily::rate_vs_rho);
    if (cmd_ant->parsed())
        return run_sweep_command(opts, SweepFamily::rate_vs_antennas);
    if (cmd_dsiso->parsed())
        return run_sweep_command(opts, SweepFamily::rate_vs_distance_siso);
    if (cmd_dmimo->parsed())
        return run_sweep_command(opts, SweepFamily::rate_vs_distance_mimo);
    if (cmd_verify->parsed())
        return run_verify_command(opts);

    std::cerr << app.help();
    return kExitUsage;
}

} // namespace efa
