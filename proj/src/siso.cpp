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

#include "efa/siso.hpp"

#include <algorithm>
#include <cmath>

#include "efa/errors.hpp"

namespace efa {

namespace {

// Denominator of the gain-eliminated SNR is affine in rho: a + b rho.
void ratio_coefficients(double received_power, double dest_gain_sq,
                        double sigma_n_sq, double& a, double& b) {
    a = received_power + sigma_n_sq;
    b = received_power * (dest_gain_sq - 1.0);
}

SisoSolution solution_at(double rho, const SisoChannel& ch, const PowerBudget& pb,
                         const NoiseModel& noise) {
    SisoSolution sol;
    sol.ps_ratio = rho;
    sol.gain_sq = amplification_gain_sq(rho, total_received_power(ch, pb),
                                        noise.sigma_n_sq_watts);
    sol.snr = forwarded_snr(rho, sol.gain_sq, ch, pb, noise);
    sol.rate_bits = rate_from_snr(sol.snr);
    return sol;
}

} // namespace

double total_received_power(const SisoChannel& ch, const PowerBudget& pb) {
    return std::norm(ch.h_rs) * pb.p_s_watts + std::norm(ch.h_rd) * pb.p_d_watts;
}

double amplification_gain_sq(double ps_ratio, double received_power,
                             double sigma_n_sq_watts) {
    return ps_ratio * received_power /
           ((1.0 - ps_ratio) * received_power + sigma_n_sq_watts);
}

double forwarded_snr(double ps_ratio, double gain_sq, const SisoChannel& ch,
                     const PowerBudget& pb, const NoiseModel& noise) {
    const double dest_gain_sq = std::norm(ch.h_rd); // |h_DR|^2 by reciprocity
    return (1.0 - ps_ratio) * dest_gain_sq * gain_sq * std::norm(ch.h_rs) *
           pb.p_s_watts / ((1.0 + dest_gain_sq * gain_sq) * noise.sigma_n_sq_watts);
}

double rate_from_snr(double snr) { return 0.5 * std::log2(1.0 + snr); }

double snr_with_max_gain(double ps_ratio, const SisoChannel& ch,
                         const PowerBudget& pb, const NoiseModel& noise) {
    const double gain_sq = amplification_gain_sq(
        ps_ratio, total_received_power(ch, pb), noise.sigma_n_sq_watts);
    return forwarded_snr(ps_ratio, gain_sq, ch, pb, noise);
}

double optimal_split_ratio(double a, double b) {
    // Stationarity of rho (1 - rho) / (a + b rho) gives b rho^2 + 2 a rho - a
    // = 0. The positive root is written without dividing by b so the b -> 0
    // limit (rho = 1/2) needs no branch and small b loses no precision.
    const double rho = a / (a + std::sqrt(a * (a + b)));
    return std::clamp(rho, 0.0, 1.0);
}

SisoSolution optimize_ps_closed_form(const SisoChannel& ch, const PowerBudget& pb,
                                     const NoiseModel& noise) {
    const double p = total_received_power(ch, pb);
    if (p <= 0.0)
        return SisoSolution{}; // dead channels: rate 0 at rho = 0
    double a = 0.0, b = 0.0;
    ratio_coefficients(p, std::norm(ch.h_rd), noise.sigma_n_sq_watts, a, b);
    return solution_at(optimal_split_ratio(a, b), ch, pb, noise);
}

SisoSolution optimize_ps_fractional(const SisoChannel& ch, const PowerBudget& pb,
                                    const NoiseModel& noise, double tol) {
    const double p = total_received_power(ch, pb);
    if (p <= 0.0)
        return SisoSolution{};
    double a = 0.0, b = 0.0;
    ratio_coefficients(p, std::norm(ch.h_rd), noise.sigma_n_sq_watts, a, b);

    // In the (s, t) variables the objective becomes -t phi(s/t) = s^2/t - s
    // with the constraint t psi(s/t) = a t + b s <= 1. The objective is
    // strictly decreasing in t, so the constraint is active: t = (1 - b s)/a.
    // What remains is a one-dimensional convex minimization over
    // s in [0, 1/(a + b)], whose endpoints map to rho = 0 and rho = 1.
    const auto objective = [a, b](double s) { return a * s * s / (1.0 - b * s) - s; };
    double lo = 0.0;
    double hi = 1.0 / (a + b);
    const double width_tol = std::max(1e-15, 1e-3 * tol) * hi;

    const double inv_golden = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_golden * (hi - lo);
    double x2 = lo + inv_golden * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    const std::size_t max_iters = 200;
    std::size_t iter = 0;
    for (; iter < max_iters && (hi - lo) > width_tol; ++iter) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_golden * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_golden * (hi - lo);
            f2 = objective(x2);
        }
    }
    if (iter == max_iters)
        throw NoConvergence("optimize_ps_fractional: iteration budget exceeded");

    const double s = 0.5 * (lo + hi);
    const double t = (1.0 - b * s) / a;
    const double rho = std::clamp(s / t, 0.0, 1.0);
    return solution_at(rho, ch, pb, noise);
}

SisoSolution optimize_no_ef(const SisoChannel& ch, double p_s_watts,
                            const NoiseModel& noise) {
    return optimize_ps_closed_form(ch, PowerBudget(0.0, p_s_watts), noise);
}

} // namespace efa
