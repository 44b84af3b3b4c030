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

#include "efa/linalg.hpp"
#include "efa/rng.hpp"

namespace efa {

/// Node placement on the source--relay--destination line. The relay sits
/// between destination and source: d_DS = d_DR + d_RS.
struct Geometry {
    Geometry(double d_ds_m_, double ratio_dr_);

    double d_ds_m;    // destination-to-source distance in meters
    double ratio_dr;  // d_DR / d_DS, in (0, 1)

    double relay_destination_distance() const { return ratio_dr * d_ds_m; }
    double relay_source_distance() const { return d_ds_m - relay_destination_distance(); }
};

/// Transmit power budgets at the destination (energy flow) and source
/// (information signal), in watts.
struct PowerBudget {
    PowerBudget(double p_d_watts_, double p_s_watts_);

    double p_d_watts;
    double p_s_watts;
};

/// Receiver noise variance, identical at the relay's detection chain and at
/// the destination.
struct NoiseModel {
    explicit NoiseModel(double sigma_n_sq_watts_);

    double sigma_n_sq_watts;
};

/// One fading draw: the source-to-relay and relay-to-destination channel
/// vectors for an r-antenna relay. The destination-to-relay channel is not
/// stored; by reciprocity it has the same entries as h_rd and only appears
/// transposed in the receive expressions.
struct ChannelRealization {
    CVector h_rs;
    CVector h_rd;

    std::size_t antennas() const { return h_rs.size(); }
};

/// r i.i.d. unit-variance circularly-symmetric complex Gaussian entries
/// (Rayleigh-distributed magnitudes).
CVector sample_small_scale(std::size_t r, Rng& rng);

/// Amplitude attenuation d^(-exponent/2) for a power-law path loss with the
/// given power exponent. Throws DomainError for d <= 0.
double path_loss_amplitude(double distance_m, double path_loss_exponent = 3.0);

/// Draws small-scale fading from two named sub-streams of `trial_stream`
/// (one per link) and applies the geometry's path loss.
ChannelRealization realize_channels(const Geometry& geom, std::size_t r,
                                    const Rng& trial_stream,
                                    double path_loss_exponent = 3.0);

} // namespace efa
