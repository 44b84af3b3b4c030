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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efa/experiments.hpp"

namespace efa {

/// Scenario description read from a JSON config file. All physical
/// quantities are SI (watts, meters). Unset optional members fall back to
/// per-family defaults when the sweep spec is built.
struct RunConfig {
    std::optional<SweepFamily> family;

    double d_ds_m = 10.0;
    double ratio_dr = 0.5;
    double p_d_watts = 0.5;
    double p_s_watts = 0.1;
    double sigma_n_sq_watts = 1e-6;
    std::size_t antennas = 4;
    double path_loss_exponent = 3.0;

    std::vector<Variant> variants;     // empty: family default
    std::vector<double> sweep_values;  // empty: family default

    double ps_grid_start = 0.01;
    double ps_grid_step = 0.01;
    double ps_grid_stop = 0.99;

    std::size_t n_trials = 1000;
    std::uint64_t master_seed = 1;
    unsigned parallelism = 0;
    std::string output = "sweep.csv";

    bool operator==(const RunConfig&) const = default;
};

/// Parses and validates a JSON config file. Malformed documents raise
/// ParseError; out-of-range or unknown fields raise ValidationError naming
/// the field.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Serializes exactly the state parse_config_text would reproduce.
std::string config_to_text(const RunConfig& cfg);

/// Inclusive arithmetic grid start, start+step, ..., stop.
std::vector<double> make_ps_grid(double start, double step, double stop);

std::vector<double> default_sweep_values(SweepFamily family, const RunConfig& cfg);
std::vector<Variant> default_variants(SweepFamily family);

/// Materializes the sweep spec for a family, applying per-family defaults
/// for unset members.
SweepSpec build_sweep_spec(const RunConfig& cfg, SweepFamily family);
MonteCarloConfig build_mc_config(const RunConfig& cfg);

} // namespace efa
