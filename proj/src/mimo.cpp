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

#include "efa/mimo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "efa/errors.hpp"
#include "efa/siso.hpp"

namespace efa {

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::efa: return "efa";
        case Variant::no_ef: return "no_ef";
        case Variant::genie_efa: return "genie_efa";
        case Variant::mrcmrt_efa: return "mrcmrt_efa";
        case Variant::mrcmrt_no_ef: return "mrcmrt_no_ef";
    }
    return "unknown";
}

std::optional<Variant> variant_from_name(std::string_view name) {
    for (Variant v : {Variant::efa, Variant::no_ef, Variant::genie_efa,
                      Variant::mrcmrt_efa, Variant::mrcmrt_no_ef})
        if (variant_name(v) == name)
            return v;
    return std::nullopt;
}

bool variant_harvests_ef(Variant v) {
    return v == Variant::efa || v == Variant::genie_efa || v == Variant::mrcmrt_efa;
}

bool variant_forwards_leakage(Variant v) {
    return v == Variant::efa || v == Variant::mrcmrt_efa;
}

bool variant_is_mrcmrt(Variant v) {
    return v == Variant::mrcmrt_efa || v == Variant::mrcmrt_no_ef;
}

MimoProblem at_ratio(const MimoScenario& scn, double ps_ratio) {
    return MimoProblem{scn.channels, scn.budgets, scn.noise, ps_ratio, scn.variant};
}

double harvested_power(double ps_ratio, const ChannelRealization& ch,
                       const PowerBudget& pb) {
    return ps_ratio * (norm_sq(ch.h_rd) * pb.p_d_watts + norm_sq(ch.h_rs) * pb.p_s_watts);
}

namespace {

// Harvested power with the variant's effective energy-flow budget.
double forward_budget(const MimoProblem& p) {
    const double p_d = variant_harvests_ef(p.variant) ? p.budgets.p_d_watts : 0.0;
    return harvested_power(p.ps_ratio, p.channels,
                           PowerBudget(p_d, p.budgets.p_s_watts));
}

// Forward-signal input covariance with the variant's leakage handling.
CMatrix input_covariance(const MimoProblem& p) {
    const ChannelRealization& ch = p.channels;
    CMatrix q = p.budgets.p_s_watts * outer(ch.h_rs, ch.h_rs);
    if (variant_forwards_leakage(p.variant))
        q = q + p.budgets.p_d_watts * outer(ch.h_rd, ch.h_rd);
    return q;
}

// Vectorized cascade channel (h_rs^T (x) h_dr^T)^H with h_dr == h_rd.
CVector cascade_vector(const ChannelRealization& ch) {
    const std::size_t r = ch.antennas();
    CVector k(r * r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            k[i * r + j] = std::conj(ch.h_rs[i] * ch.h_rd[j]);
    return k;
}

RelayOperators assemble_impl(const MimoProblem& p) {
    if (!(p.ps_ratio > 0.0) || !(p.ps_ratio < 1.0))
        throw DomainError("assemble_operators: ps_ratio must lie in (0, 1)");
    const std::size_t r = p.channels.antennas();
    if (r == 0 || p.channels.h_rd.size() != r)
        throw DomainError("assemble_operators: inconsistent channel vectors");

    RelayOperators ops;
    ops.ps_ratio = p.ps_ratio;
    ops.forward_budget = forward_budget(p);
    if (!(ops.forward_budget > 0.0))
        throw DegenerateChannel("assemble_operators: no harvested power");

    ops.input_cov = input_covariance(p);
    ops.input_cov_lifted = kron(transpose(ops.input_cov), CMatrix::identity(r));
    ops.cascade = cascade_vector(p.channels);
    ops.snr_numerator = (1.0 - p.ps_ratio) * outer(ops.cascade, ops.cascade);
    ops.noise_amplification =
        kron(CMatrix::identity(r), outer(conjugate(p.channels.h_rd),
                                         conjugate(p.channels.h_rd)));

    const double sigma = p.noise.sigma_n_sq_watts;
    CMatrix reg = (1.0 - p.ps_ratio) * ops.input_cov_lifted;
    for (std::size_t i = 0; i < r * r; ++i)
        reg(i, i) += sigma;
    ops.snr_denominator = ops.noise_amplification + (1.0 / ops.forward_budget) * reg;
    ops.denominator_factor = cholesky_hermitian(ops.snr_denominator);
    return ops;
}

} // namespace

RelayOperators assemble_operators(const MimoProblem& p) { return assemble_impl(p); }

RelayOperators genie_operators(const MimoProblem& p) {
    MimoProblem genie = p;
    genie.variant = Variant::genie_efa;
    return assemble_impl(genie);
}

double forwarded_power(const CMatrix& relay_matrix, double ps_ratio,
                       const CMatrix& input_cov, double sigma_n_sq_watts) {
    const CMatrix fq = relay_matrix * input_cov;
    double traced = 0.0;
    for (std::size_t i = 0; i < relay_matrix.rows(); ++i)
        for (std::size_t j = 0; j < relay_matrix.cols(); ++j)
            traced += (std::conj(relay_matrix(i, j)) * fq(i, j)).real();
    const double fro_sq = frobenius_norm(relay_matrix) * frobenius_norm(relay_matrix);
    return (1.0 - ps_ratio) * traced + sigma_n_sq_watts * fro_sq;
}

double forwarded_power(const CMatrix& relay_matrix, const MimoProblem& p) {
    return forwarded_power(relay_matrix, p.ps_ratio, input_covariance(p),
                           p.noise.sigma_n_sq_watts);
}

double forwarded_power_lifted(const CVector& f, const RelayOperators& ops,
                              double sigma_n_sq_watts) {
    return (1.0 - ops.ps_ratio) * herm_quad(ops.input_cov_lifted, f) +
           sigma_n_sq_watts * norm_sq(f);
}

double relay_snr_matrix_form(const CMatrix& relay_matrix, const MimoProblem& p) {
    const ChannelRealization& ch = p.channels;
    const double sigma = p.noise.sigma_n_sq_watts;
    // h_DR^T F h_RS with h_DR == h_RD entrywise.
    const CVector fh = relay_matrix * ch.h_rs;
    const cplx through = tdot(ch.h_rd, fh);
    // h_DR^T F F^H h_DR^* == ||F^H conj(h_rd)||^2
    const CVector back = adjoint(relay_matrix) * conjugate(ch.h_rd);
    const double noise_boost = norm_sq(back);
    return (1.0 - p.ps_ratio) * p.budgets.p_s_watts * std::norm(through) /
           (sigma * (noise_boost + 1.0));
}

double relay_snr_operator_form(const CVector& f, const RelayOperators& ops,
                               const MimoProblem& p) {
    const double num = herm_quad(ops.snr_numerator, f);
    const double den = herm_quad(ops.snr_denominator, f);
    return p.budgets.p_s_watts * num / (p.noise.sigma_n_sq_watts * den);
}

double relay_snr(const CVector& f, const MimoProblem& p, const RelayOperators& ops) {
    const double budget = ops.forward_budget;
    const double actual = forwarded_power_lifted(f, ops, p.noise.sigma_n_sq_watts);
    const double residual = std::abs(actual - budget) / budget;
    if (residual > 1e-6)
        throw ConstraintViolated("relay_snr: forwarded power off the constraint surface");

    const double matrix_form =
        relay_snr_matrix_form(unvec(f, p.channels.antennas(), p.channels.antennas()), p);
    const double operator_form = relay_snr_operator_form(f, ops, p);
    const double scale = std::max(matrix_form, operator_form);
    if (matrix_form > 0.0 && operator_form > 0.0 &&
        std::abs(matrix_form - operator_form) > scale * (1e-9 + 20.0 * residual))
        throw std::logic_error("relay_snr: evaluation routes disagree");
    return matrix_form;
}

double relay_snr(const CVector& f, const MimoProblem& p) {
    return relay_snr(f, p, assemble_operators(p));
}

namespace {

MimoSolution finish_solution(const MimoProblem& p, const RelayOperators& ops,
                             const CVector& unit_whitened) {
    MimoSolution sol;
    sol.ps_ratio = p.ps_ratio;
    sol.variant = p.variant;
    sol.whitened_dir = unit_whitened;

    // Unwhiten the direction, then scale onto the power-constraint surface.
    const CVector base = solve_upper(ops.denominator_factor, unit_whitened);
    const double per_unit =
        forwarded_power_lifted(base, ops, p.noise.sigma_n_sq_watts);
    sol.whitened_norm = std::sqrt(ops.forward_budget / per_unit);
    sol.relay_vec = sol.whitened_norm * base;
    const std::size_t r = p.channels.antennas();
    sol.relay_matrix = unvec(sol.relay_vec, r, r);
    sol.snr = relay_snr(sol.relay_vec, p, ops);
    sol.rate_bits = rate_from_snr(sol.snr);
    return sol;
}

void require_eigen_variant(const MimoProblem& p, const char* who) {
    if (variant_is_mrcmrt(p.variant))
        throw DomainError(std::string(who) + ": matched-filter variants use mrcmrt_solution");
}

} // namespace

MimoSolution optimize_relay_matrix(const MimoProblem& p) {
    require_eigen_variant(p, "optimize_relay_matrix");
    const RelayOperators ops = assemble_operators(p);

    // Whitened numerator (L^-1)^H K~ L^-1; with the rank-one numerator this
    // is (1 - rho) w w^H for w = L^-H cascade.
    const CVector w = solve_upper_adjoint(ops.denominator_factor, ops.cascade);
    const CMatrix whitened = (1.0 - p.ps_ratio) * outer(w, w);
    const EigenPair top = dominant_eigenpair(whitened);
    return finish_solution(p, ops, top.vector);
}

MimoSolution optimize_relay_matrix_shortcut(const MimoProblem& p) {
    require_eigen_variant(p, "optimize_relay_matrix_shortcut");
    const RelayOperators ops = assemble_operators(p);

    CVector x = solve_hermitian(ops.snr_denominator, ops.cascade);
    const double xn = norm(x);
    CVector unit_whitened;
    if (xn > 0.0) {
        x = (1.0 / xn) * x;
        CVector g = ops.denominator_factor * x;
        unit_whitened = (1.0 / norm(g)) * g;
    } else {
        unit_whitened = CVector(x.size());
        unit_whitened[0] = 1.0;
    }
    normalize_phase(unit_whitened);
    return finish_solution(p, ops, unit_whitened);
}

std::vector<double> default_ps_grid() {
    std::vector<double> grid(99);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = 0.01 * static_cast<double>(i + 1);
    return grid;
}

MimoSolution grid_search_ps(const MimoScenario& scn, const std::vector<double>& grid) {
    if (grid.empty())
        throw ValidationError("grid_search_ps: empty grid");
    std::vector<double> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    for (double rho : sorted)
        if (!(rho > 0.0) || !(rho < 1.0))
            throw ValidationError("grid_search_ps: grid entries must lie in (0, 1)");

    MimoSolution best;
    bool have_best = false;
    for (double rho : sorted) {
        const MimoProblem p = at_ratio(scn, rho);
        MimoSolution sol =
            variant_is_mrcmrt(scn.variant) ? mrcmrt_solution(p) : optimize_relay_matrix(p);
        if (!have_best || sol.rate_bits > best.rate_bits) {
            best = std::move(sol);
            have_best = true;
        }
    }
    return best;
}

CMatrix mrcmrt_matrix(double eta, const ChannelRealization& ch) {
    const double nrs = norm(ch.h_rs);
    const double nrd = norm(ch.h_rd);
    if (!(nrs > 0.0) || !(nrd > 0.0))
        throw DegenerateChannel("mrcmrt_matrix: zero channel");
    return (eta / (nrd * nrs)) * outer(conjugate(ch.h_rd), ch.h_rs);
}

namespace {

// Scalar coefficients of the matched-filter design: the rank-one structure
// reduces the forwarded power and SNR to the same quadratic-over-affine shape
// as the SISO problem.
struct MrcMrtScalars {
    double source_gain;      // ||h_rs||^2
    double dest_gain;        // ||h_rd||^2
    double forward_cov;      // q: per-eta^2 forward input power
    double harvest;          // p: per-rho harvested power
};

MrcMrtScalars mrcmrt_scalars(const MimoProblem& p) {
    const ChannelRealization& ch = p.channels;
    MrcMrtScalars s{};
    s.source_gain = norm_sq(ch.h_rs);
    s.dest_gain = norm_sq(ch.h_rd);
    if (!(s.source_gain > 0.0) || !(s.dest_gain > 0.0))
        throw DegenerateChannel("mrcmrt: zero channel");
    s.forward_cov = s.source_gain * p.budgets.p_s_watts;
    if (variant_forwards_leakage(p.variant))
        s.forward_cov += std::norm(dot(p.channels.h_rs, p.channels.h_rd)) *
                         p.budgets.p_d_watts / s.source_gain;
    s.harvest = s.source_gain * p.budgets.p_s_watts;
    if (variant_harvests_ef(p.variant))
        s.harvest += s.dest_gain * p.budgets.p_d_watts;
    return s;
}

} // namespace

MimoSolution mrcmrt_solution(const MimoProblem& p) {
    if (!variant_is_mrcmrt(p.variant))
        throw DomainError("mrcmrt_solution: problem variant is not a matched-filter one");
    const MrcMrtScalars s = mrcmrt_scalars(p);
    const double sigma = p.noise.sigma_n_sq_watts;
    const double rho = p.ps_ratio;

    // Equality power constraint fixes the amplification: eta^2 is analogous
    // to the SISO |f|^2 but harvesting and forwarding see different powers.
    const double eta_sq = rho * s.harvest / ((1.0 - rho) * s.forward_cov + sigma);
    const double snr = (1.0 - rho) * p.budgets.p_s_watts * eta_sq * s.dest_gain *
                       s.source_gain / (sigma * (eta_sq * s.dest_gain + 1.0));

    MimoSolution sol;
    sol.ps_ratio = rho;
    sol.variant = p.variant;
    sol.relay_matrix = mrcmrt_matrix(std::sqrt(eta_sq), p.channels);
    sol.relay_vec = vec(sol.relay_matrix);
    sol.snr = snr;
    sol.rate_bits = rate_from_snr(snr);
    return sol;
}

MimoSolution optimize_mrcmrt(const MimoScenario& scn) {
    if (!variant_is_mrcmrt(scn.variant))
        throw DomainError("optimize_mrcmrt: scenario variant is not a matched-filter one");
    const MrcMrtScalars s = mrcmrt_scalars(at_ratio(scn, 0.5));
    const double sigma = scn.noise.sigma_n_sq_watts;
    const double a = s.forward_cov + sigma;
    const double b = s.harvest * s.dest_gain - s.forward_cov;
    return mrcmrt_solution(at_ratio(scn, optimal_split_ratio(a, b)));
}

DiagnosticsReport diagnostics(const CMatrix& relay_matrix, const ChannelRealization& ch,
                              const PowerBudget& pb, double ps_ratio) {
    const double fro = frobenius_norm(relay_matrix);
    if (!(fro > 0.0))
        throw DomainError("diagnostics: zero relay matrix");
    const std::size_t r = relay_matrix.rows();

    const Svd dec = svd((1.0 / fro) * relay_matrix);

    const double nrs = norm(ch.h_rs);
    const double nrd = norm(ch.h_rd);
    const CVector dest_conj_dir = (1.0 / nrd) * conjugate(ch.h_rd);
    const CVector source_dir = (1.0 / nrs) * ch.h_rs;
    const CVector ef_dir = (1.0 / nrd) * ch.h_rd;

    DiagnosticsReport rep;
    rep.singular_values = dec.singular_values;
    rep.tx_alignment.resize(r);
    rep.rx_signal_alignment.resize(r);
    rep.rx_leakage_alignment.resize(r);
    rep.tx_angle.resize(r);
    rep.rx_signal_angle.resize(r);
    rep.rx_leakage_angle.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        CVector u(r), v(r);
        for (std::size_t row = 0; row < r; ++row) {
            u[row] = dec.u(row, i);
            v[row] = dec.v(row, i);
        }
        const cplx tx = dot(dest_conj_dir, u);
        const cplx rx_sig = dot(source_dir, v);
        const cplx rx_leak = dot(ef_dir, v);
        rep.tx_alignment[i] = std::abs(tx);
        rep.rx_signal_alignment[i] = std::abs(rx_sig);
        rep.rx_leakage_alignment[i] = std::abs(rx_leak);
        rep.tx_angle[i] = std::arg(tx);
        rep.rx_signal_angle[i] = std::arg(rx_sig);
        rep.rx_leakage_angle[i] = std::arg(rx_leak);
    }
    rep.signal_power_weight = (1.0 - ps_ratio) * pb.p_s_watts / (ps_ratio * nrd * nrd);
    rep.leakage_power_weight = (1.0 - ps_ratio) * pb.p_d_watts / (ps_ratio * nrs * nrs);
    rep.received_power = nrd * nrd * pb.p_d_watts + nrs * nrs * pb.p_s_watts;
    return rep;
}

} // namespace efa
