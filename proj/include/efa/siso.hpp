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

#include "efa/channel.hpp"
#include "efa/linalg.hpp"

namespace efa {

/// Scalar channels of the single-antenna relay link. The destination-to-relay
/// coefficient equals h_rd by reciprocity.
struct SisoChannel {
    cplx h_rs{};
    cplx h_rd{};
};

/// Result of a power-splitting optimization for the SISO relay.
struct SisoSolution {
    double ps_ratio = 0.0;   // harvested fraction rho
    double gain_sq = 0.0;    // amplification power gain |f|^2
    double snr = 0.0;
    double rate_bits = 0.0;  // bits per channel use
};

/// Total RF power arriving at the relay: |h_rs|^2 P_S + |h_rd|^2 P_D.
double total_received_power(const SisoChannel& ch, const PowerBudget& pb);

/// Amplification power gain when the relay forwards at its full harvested
/// budget: rho p / ((1 - rho) p + sigma^2). Monotone increasing in rho.
double amplification_gain_sq(double ps_ratio, double received_power,
                             double sigma_n_sq_watts);

/// Destination SNR of the forwarded signal for a given gain.
double forwarded_snr(double ps_ratio, double gain_sq, const SisoChannel& ch,
                     const PowerBudget& pb, const NoiseModel& noise);

/// Half-duplex rate 0.5 log2(1 + snr).
double rate_from_snr(double snr);

/// Destination SNR as a function of rho alone, with the gain pinned to the
/// power-constraint boundary.
double snr_with_max_gain(double ps_ratio, const SisoChannel& ch,
                         const PowerBudget& pb, const NoiseModel& noise);

/// Maximizer of rho (1 - rho) / (a + b rho) on [0, 1], for a > 0, a + b > 0.
/// This is the shape shared by every power-splitting objective in the
/// library once the gain is eliminated.
double optimal_split_ratio(double a, double b);

/// Stationary-point solution of the power-splitting problem. Degenerate
/// channels (zero received power) yield a rate-0 solution with rho = 0.
SisoSolution optimize_ps_closed_form(const SisoChannel& ch, const PowerBudget& pb,
                                     const NoiseModel& noise);

/// Numeric solution through the fractional program's convex transform
/// (s = rho / psi(rho), t = 1 / psi(rho)): the positivity constraint is
/// eliminated at its active boundary and the remaining one-dimensional convex
/// objective is minimized by golden-section search. Independent of the
/// closed form; the two must agree in achieved SNR within `tol` relative.
SisoSolution optimize_ps_fractional(const SisoChannel& ch, const PowerBudget& pb,
                                    const NoiseModel& noise, double tol = 1e-9);

/// Power splitting without the destination's energy flow (P_D = 0).
SisoSolution optimize_no_ef(const SisoChannel& ch, double p_s_watts,
                            const NoiseModel& noise);

} // namespace efa
