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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efa/channel.hpp"
#include "efa/mimo.hpp"

namespace efa {

/// Monte Carlo execution parameters. Results are bit-identical for a fixed
/// (master_seed, n_trials) pair regardless of parallelism.
struct MonteCarloConfig {
    std::size_t n_trials = 1000;
    std::uint64_t master_seed = 1;
    unsigned parallelism = 0; // 0: one worker per hardware thread
};

enum class SweepFamily {
    rate_vs_rho,
    rate_vs_antennas,
    rate_vs_distance_siso,
    rate_vs_distance_mimo,
};

std::string_view family_name(SweepFamily f);
std::optional<SweepFamily> family_from_name(std::string_view name);

struct SweepSpec {
    SweepFamily family = SweepFamily::rate_vs_rho;
    std::vector<double> sweep_values;  // strictly increasing
    Geometry geometry{10.0, 0.5};
    PowerBudget budgets{0.5, 0.1};
    NoiseModel noise{1e-6};
    std::size_t antennas = 4;          // relay antennas (fixed-r families)
    std::vector<Variant> variants;
    std::vector<double> ps_grid;       // empty: default 0.01:0.01:0.99
    double path_loss_exponent = 3.0;
};

struct SweepRow {
    double sweep_value = 0.0;
    Variant variant = Variant::efa;
    double mean_rate_bits = 0.0;
    double std_error = 0.0;
    std::size_t n_trials = 0;
};

struct SweepResult {
    std::vector<SweepRow> rows; // sorted by (sweep_value, variant name)
};

/// Rate against the splitting ratio for one fixed channel realization.
SweepResult run_rate_vs_rho(const SweepSpec& spec, const MonteCarloConfig& mc);

/// Average best-ratio rate against the relay antenna count.
SweepResult run_rate_vs_antennas(const SweepSpec& spec, const MonteCarloConfig& mc);

/// Average rate against the relay position for the single-antenna link.
SweepResult run_rate_vs_distance_siso(const SweepSpec& spec, const MonteCarloConfig& mc);

/// Average best-ratio rate against the relay position for the r-antenna link.
SweepResult run_rate_vs_distance_mimo(const SweepSpec& spec, const MonteCarloConfig& mc);

/// Dispatch on spec.family.
SweepResult run_sweep(const SweepSpec& spec, const MonteCarloConfig& mc);

/// CSV serialization: header `sweep_value,variant,mean_rate_bits,std_error,
/// n_trials`, 17 significant digits, rows ordered by (sweep_value, variant).
std::string to_csv(const SweepResult& result);
void emit_csv(const SweepResult& result, const std::string& path);

} // namespace efa
