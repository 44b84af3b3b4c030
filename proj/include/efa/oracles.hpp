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

#include <cstddef>
#include <string>
#include <vector>

#include "efa/channel.hpp"
#include "efa/mimo.hpp"
#include "efa/rng.hpp"
#include "efa/siso.hpp"

// Brute-force and perturbation verifiers for the optimized designs. Every
// evaluation formula in this module is written from the raw channel inputs,
// on purpose duplicating (in different algebraic form) what the optimized
// paths compute, so a defect in either side surfaces as a disagreement.

namespace efa {

struct OracleReport {
    std::string name;
    std::size_t instances = 0;
    double worst_relative_gap = 0.0;
    bool passed = false;
    double tolerance = 0.0;
};

struct GridBest {
    double ps_ratio = 0.0;
    double snr = 0.0;
};

/// Exhaustive scan of the gain-eliminated SISO SNR over the ratio grid
/// {0, step, 2 step, ..., 1}.
GridBest grid_oracle_siso(const SisoChannel& ch, const PowerBudget& pb,
                          const NoiseModel& noise, double step);

/// Challenges the optimized relay matrix with n random directions, each
/// rescaled onto the power-constraint surface. Passes when no sample beats
/// the optimum beyond 1e-8 relative.
OracleReport random_direction_oracle_mimo(const MimoProblem& p, std::size_t n, Rng& rng);

/// Local-optimality probe: perturbs the solution by random steps of the given
/// relative radius, projected back to the constraint surface.
OracleReport perturbation_check(const MimoSolution& sol, const MimoProblem& p,
                                std::size_t n, double radius, Rng& rng);

/// Re-evaluates the matched-filter solution generically at its relay matrix
/// and compares with the scalarized value the optimizer used.
OracleReport mrcmrt_consistency(const MimoProblem& p);

/// Full verification suite behind the CLI `verify` subcommand.
std::vector<OracleReport> verify_suite(std::uint64_t seed);

/// CSV rows `name,instances,worst_relative_gap,passed,tolerance`.
std::string reports_to_csv(const std::vector<OracleReport>& reports);

} // namespace efa
