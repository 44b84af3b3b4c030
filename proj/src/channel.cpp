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

#include "efa/channel.hpp"

#include <cmath>

#include "efa/errors.hpp"

namespace efa {

namespace {
// Sub-stream labels inside one trial stream.
constexpr std::uint64_t kLinkRelaySource = 0;
constexpr std::uint64_t kLinkRelayDestination = 1;
} // namespace

Geometry::Geometry(double d_ds_m_, double ratio_dr_)
    : d_ds_m(d_ds_m_), ratio_dr(ratio_dr_) {
    if (!(d_ds_m > 0.0))
        throw DomainError("Geometry: d_ds_m must be positive");
    if (!(ratio_dr > 0.0) || !(ratio_dr < 1.0))
        throw DomainError("Geometry: ratio_dr must lie in (0, 1)");
}

PowerBudget::PowerBudget(double p_d_watts_, double p_s_watts_)
    : p_d_watts(p_d_watts_), p_s_watts(p_s_watts_) {
    if (!(p_d_watts >= 0.0))
        throw DomainError("PowerBudget: p_d_watts must be nonnegative");
    if (!(p_s_watts > 0.0))
        throw DomainError("PowerBudget: p_s_watts must be positive");
}

NoiseModel::NoiseModel(double sigma_n_sq_watts_) : sigma_n_sq_watts(sigma_n_sq_watts_) {
    if (!(sigma_n_sq_watts > 0.0))
        throw DomainError("NoiseModel: sigma_n_sq_watts must be positive");
}

CVector sample_small_scale(std::size_t r, Rng& rng) {
    CVector h(r);
    for (cplx& x : h)
        x = rng.circular_gaussian();
    return h;
}

double path_loss_amplitude(double distance_m, double path_loss_exponent) {
    if (!(distance_m > 0.0))
        throw DomainError("path_loss_amplitude: distance must be positive");
    return std::pow(distance_m, -0.5 * path_loss_exponent);
}

ChannelRealization realize_channels(const Geometry& geom, std::size_t r,
                                    const Rng& trial_stream, double path_loss_exponent) {
    Rng rs_stream = trial_stream.substream(kLinkRelaySource);
    Rng rd_stream = trial_stream.substream(kLinkRelayDestination);

    const double amp_rs = path_loss_amplitude(geom.relay_source_distance(), path_loss_exponent);
    const double amp_rd = path_loss_amplitude(geom.relay_destination_distance(), path_loss_exponent);

    ChannelRealization ch;
    ch.h_rs = amp_rs * sample_small_scale(r, rs_stream);
    ch.h_rd = amp_rd * sample_small_scale(r, rd_stream);
    return ch;
}

} // namespace efa
