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
#include <string_view>
#include <vector>

#include "efa/channel.hpp"
#include "efa/linalg.hpp"

namespace efa {

/// Protocol variants of the two-phase relaying.
///
///  - Efa:        energy flow on; the leakage it causes is forwarded.
///  - NoEf:       destination transmits nothing (P_D treated as 0 throughout).
///  - GenieEfa:   energy flow on, but an ideal relay drops the leakage from
///                the forwarded signal; harvesting still benefits from P_D.
///  - MrcMrtEfa / MrcMrtNoEf: rank-one matched-filter relay matrix instead of
///                the optimized one.
enum class Variant { efa, no_ef, genie_efa, mrcmrt_efa, mrcmrt_no_ef };

std::string_view variant_name(Variant v);
std::optional<Variant> variant_from_name(std::string_view name);

bool variant_harvests_ef(Variant v);       // P_D contributes to harvested power
bool variant_forwards_leakage(Variant v);  // P_D term kept in the forward covariance
bool variant_is_mrcmrt(Variant v);

/// One relay-matrix design problem at a fixed power-splitting ratio.
struct MimoProblem {
    ChannelRealization channels;
    PowerBudget budgets{0.5, 0.1};
    NoiseModel noise{1e-6};
    double ps_ratio = 0.5; // in (0, 1)
    Variant variant = Variant::efa;
};

/// A design problem before the splitting ratio is chosen.
struct MimoScenario {
    ChannelRealization channels;
    PowerBudget budgets{0.5, 0.1};
    NoiseModel noise{1e-6};
    Variant variant = Variant::efa;
};

MimoProblem at_ratio(const MimoScenario& scn, double ps_ratio);

/// Operator blocks of the vectorized relay-matrix design. All square blocks
/// are r^2 x r^2 except input_cov (r x r).
struct RelayOperators {
    CMatrix input_cov;           // forward-signal input covariance Q (variant-effective)
    CMatrix input_cov_lifted;    // Q^T (x) I
    CVector cascade;             // vectorized source->relay->destination cascade
    CMatrix snr_numerator;       // (1 - rho) * cascade cascade^H
    CMatrix noise_amplification; // I (x) (conj(h_rd) h_rd^T)
    CMatrix snr_denominator;     // noise_amplification + ((1-rho) lifted + sigma^2 I)/P_R
    CMatrix denominator_factor;  // L with L^H L == snr_denominator
    double forward_budget = 0.0; // harvested power P_R available for forwarding (W)
    double ps_ratio = 0.0;
};

/// Harvested power rho (|h_rd|^2 P_D + |h_rs|^2 P_S).
double harvested_power(double ps_ratio, const ChannelRealization& ch,
                       const PowerBudget& pb);

/// Builds every operator block for the problem's variant. Throws
/// DegenerateChannel when no power can be harvested.
RelayOperators assemble_operators(const MimoProblem& p);

/// Operators for the genie-aided variant: the leakage term is dropped from
/// the forward covariance while harvesting keeps the energy-flow power.
RelayOperators genie_operators(const MimoProblem& p);

/// Mean transmit power of the forwarded signal, trace form:
/// (1 - rho) Tr{F^H F Q} + sigma^2 Tr{F^H F}.
double forwarded_power(const CMatrix& relay_matrix, double ps_ratio,
                       const CMatrix& input_cov, double sigma_n_sq_watts);
/// Same using the problem's variant-effective covariance.
double forwarded_power(const CMatrix& relay_matrix, const MimoProblem& p);
/// Same quantity as a quadratic form in the vectorized relay matrix.
double forwarded_power_lifted(const CVector& f, const RelayOperators& ops,
                              double sigma_n_sq_watts);

/// Destination SNR straight from the channels (matrix form).
double relay_snr_matrix_form(const CMatrix& relay_matrix, const MimoProblem& p);
/// Destination SNR through the assembled quadratic forms; valid only on the
/// power-constraint surface.
double relay_snr_operator_form(const CVector& f, const RelayOperators& ops,
                               const MimoProblem& p);
/// Checked SNR: verifies the power constraint holds with equality (throws
/// ConstraintViolated beyond 1e-6 relative), evaluates both routes, and
/// returns the matrix-form value.
double relay_snr(const CVector& f, const MimoProblem& p);
double relay_snr(const CVector& f, const MimoProblem& p, const RelayOperators& ops);

/// Optimized relay design at one splitting ratio.
struct MimoSolution {
    CMatrix relay_matrix;     // F
    CVector relay_vec;        // vec(F)
    CVector whitened_dir;     // unit direction in the whitened coordinates (empty for MRCMRT)
    double whitened_norm = 0.0;
    double snr = 0.0;
    double rate_bits = 0.0;
    double ps_ratio = 0.0;
    Variant variant = Variant::efa;
};

/// Rate-optimal relay matrix at the problem's fixed ratio, via Cholesky
/// whitening and the dominant eigenvector of the whitened rank-one numerator.
/// Variants: efa, no_ef, genie_efa.
MimoSolution optimize_relay_matrix(const MimoProblem& p);

/// Same optimum through the rank-one shortcut: the unscaled solution solves
/// snr_denominator x = cascade. Used to cross-check the eigeniteration path.
MimoSolution optimize_relay_matrix_shortcut(const MimoProblem& p);

/// Default exhaustive power-splitting grid 0.01, 0.02, ..., 0.99.
std::vector<double> default_ps_grid();

/// Best solution over a grid of splitting ratios; ties go to the smaller
/// ratio. Dispatches to the variant's solver at each grid point.
MimoSolution grid_search_ps(const MimoScenario& scn, const std::vector<double>& grid);

/// Rank-one matched-filter relay matrix eta * conj(h_dr) h_rs^H normalized by
/// the channel norms. Throws DegenerateChannel on a zero channel.
CMatrix mrcmrt_matrix(double eta, const ChannelRealization& ch);

/// Matched-filter solution at the problem's fixed ratio; the equality power
/// constraint determines eta.
MimoSolution mrcmrt_solution(const MimoProblem& p);

/// Matched-filter solution with the splitting ratio set by the same
/// closed-form machinery as the SISO optimizer.
MimoSolution optimize_mrcmrt(const MimoScenario& scn);

/// Signal-space alignment report of a relay matrix: singular values of
/// F/||F||_F and the alignment of the singular directions with the channel
/// directions (cosines of Hermitian angles plus pseudo-angles).
struct DiagnosticsReport {
    std::vector<double> singular_values;      // descending, squares sum to 1
    std::vector<double> tx_alignment;         // |<conj dest-channel dir, u_i>|
    std::vector<double> rx_signal_alignment;  // |<source-channel dir, v_i>|
    std::vector<double> rx_leakage_alignment; // |<energy-flow-channel dir, v_i>|
    std::vector<double> tx_angle;             // pseudo-angles (rad) of the above
    std::vector<double> rx_signal_angle;
    std::vector<double> rx_leakage_angle;
    double signal_power_weight = 0.0;  // (1-rho) P_S / (rho |h_dr|^2)
    double leakage_power_weight = 0.0; // (1-rho) P_D / (rho |h_rs|^2)
    double received_power = 0.0;       // |h_rd|^2 P_D + |h_rs|^2 P_S (W)
};

DiagnosticsReport diagnostics(const CMatrix& relay_matrix, const ChannelRealization& ch,
                              const PowerBudget& pb, double ps_ratio);

} // namespace efa
