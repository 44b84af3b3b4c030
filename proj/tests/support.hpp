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

#include <cmath>
#include <cstddef>
#include <vector>

#include "efa/channel.hpp"
#include "efa/linalg.hpp"
#include "efa/rng.hpp"

namespace efa::test {

inline double rel_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    CMatrix m(rows, cols);
    for (cplx& x : m.data())
        x = rng.circular_gaussian();
    return m;
}

inline CVector random_vector(std::size_t n, Rng& rng) {
    CVector v(n);
    for (cplx& x : v)
        x = rng.circular_gaussian();
    return v;
}

inline CMatrix random_hermitian_pd(std::size_t n, Rng& rng, double shift = 0.5) {
    const CMatrix g = random_matrix(n, n, rng);
    CMatrix m = adjoint(g) * g;
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) += shift;
    return m;
}

/// True when the sequence rises to a single peak and falls afterwards,
/// allowing wiggles up to `slack` relative to the maximum.
inline bool is_unimodal(const std::vector<double>& y, double slack = 1e-12) {
    double peak = 0.0;
    for (double v : y)
        peak = std::max(peak, std::abs(v));
    const double tol = slack * peak;
    std::size_t argmax = 0;
    for (std::size_t i = 1; i < y.size(); ++i)
        if (y[i] > y[argmax])
            argmax = i;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        if (i < argmax && y[i + 1] < y[i] - tol)
            return false;
        if (i >= argmax && y[i + 1] > y[i] + tol)
            return false;
    }
    return true;
}

inline ChannelRealization draw_channels(std::size_t r, const Rng& trial, double ratio = 0.5,
                                        double d_ds = 10.0) {
    return realize_channels(Geometry(d_ds, ratio), r, trial);
}

} // namespace efa::test
