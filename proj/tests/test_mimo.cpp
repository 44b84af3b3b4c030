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

#include <cmath>

#include <doctest.h>

#include "efa/errors.hpp"
#include "efa/mimo.hpp"
#include "efa/siso.hpp"
#include "support.hpp"

using namespace efa;
using test::rel_gap;

namespace {

MimoProblem random_problem(Rng trial, std::size_t r, Variant v,
                           const PowerBudget& pb = PowerBudget(0.5, 0.1)) {
    MimoProblem p;
    p.channels = test::draw_channels(r, trial, 0.1 + 0.8 * trial.uniform());
    p.budgets = pb;
    p.noise = NoiseModel(1e-6);
    p.ps_ratio = 0.05 + 0.9 * trial.uniform();
    p.variant = v;
    return p;
}

// Rescales a candidate vector onto the power-constraint surface.
CVector feasible(const CVector& dir, const MimoProblem& p, const RelayOperators& ops) {
    const double fwd = forwarded_power_lifted(dir, ops, p.noise.sigma_n_sq_watts);
    return std::sqrt(ops.forward_budget / fwd) * dir;
}

} // namespace

TEST_SUITE("mimo") {

TEST_CASE("variant names round-trip") {
    for (Variant v : {Variant::efa, Variant::no_ef, Variant::genie_efa,
                      Variant::mrcmrt_efa, Variant::mrcmrt_no_ef})
        CHECK(variant_from_name(variant_name(v)) == v);
    CHECK(!variant_from_name("bogus").has_value());
}

TEST_CASE("harvested power") {
    ChannelRealization ch;
    ch.h_rd = {cplx(1.0), cplx(1.0)};            // ||h_rd||^2 = 2
    ch.h_rs = {cplx(1.0), cplx(0.0)};            // ||h_rs||^2 = 1
    const PowerBudget pb(0.5, 0.1);
    CHECK(harvested_power(0.0, ch, pb) == doctest::Approx(0.0));
    CHECK(harvested_power(0.5, ch, pb) == doctest::Approx(0.55));
    CHECK(harvested_power(0.5, ch, PowerBudget(1.0, 0.2)) == doctest::Approx(1.1));
}

TEST_CASE("operator assembly collapses to the SISO quantities at r = 1") {
    Rng master(401);
    Rng trial = master.substream(0);
    MimoProblem p = random_problem(trial, 1, Variant::efa);
    const RelayOperators ops = assemble_operators(p);

    const SisoChannel sc{p.channels.h_rs[0], p.channels.h_rd[0]};
    const double p1 = total_received_power(sc, p.budgets);
    const double hdr2 = std::norm(sc.h_rd);
    const double budget = p.ps_ratio * p1;

    CHECK(rel_gap(ops.forward_budget, budget) < 1e-14);
    CHECK(rel_gap(ops.snr_numerator(0, 0).real(),
                  (1.0 - p.ps_ratio) * hdr2 * std::norm(sc.h_rs)) < 1e-13);
    const double jt = hdr2 + ((1.0 - p.ps_ratio) * p1 + p.noise.sigma_n_sq_watts) / budget;
    CHECK(rel_gap(ops.snr_denominator(0, 0).real(), jt) < 1e-12);
}

TEST_CASE("operator blocks satisfy their structural identities") {
    Rng master(402);
    for (std::size_t i = 0; i < 20; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 4, Variant::efa);
        const RelayOperators ops = assemble_operators(p);
        const std::size_t n = 16;

        CHECK(is_hermitian(ops.input_cov));
        CHECK(is_hermitian(ops.input_cov_lifted));
        CHECK(is_hermitian(ops.snr_numerator));
        CHECK(is_hermitian(ops.noise_amplification));
        CHECK(is_hermitian(ops.snr_denominator));

        // numerator is the scaled outer product of the cascade vector
        const CMatrix k_outer =
            (1.0 - p.ps_ratio) * outer(ops.cascade, ops.cascade);
        CHECK(frobenius_norm(ops.snr_numerator - k_outer) <
              1e-10 * frobenius_norm(k_outer));

        // rank-one action: K f == cascade (cascade^H f)
        Rng vec_rng = trial.substream(1);
        const CVector f = test::random_vector(n, vec_rng);
        const CVector kf = outer(ops.cascade, ops.cascade) * f;
        const CVector expect = dot(ops.cascade, f) * ops.cascade;
        CHECK(norm(kf - expect) < 1e-10 * norm(expect));

        // denominator rebuild within 1e-12
        CMatrix rebuilt = (1.0 / ops.forward_budget) *
                          ((1.0 - p.ps_ratio) * ops.input_cov_lifted);
        for (std::size_t d = 0; d < n; ++d)
            rebuilt(d, d) += p.noise.sigma_n_sq_watts / ops.forward_budget;
        rebuilt = rebuilt + ops.noise_amplification;
        CHECK(frobenius_norm(rebuilt - ops.snr_denominator) <
              1e-12 * frobenius_norm(rebuilt));

        // cholesky factor reproduces the denominator
        CHECK(frobenius_norm(adjoint(ops.denominator_factor) * ops.denominator_factor -
                             ops.snr_denominator) <
              1e-10 * frobenius_norm(ops.snr_denominator));
    }
}

TEST_CASE("the cascade vector realizes the through-channel identity") {
    Rng master(403);
    Rng trial = master.substream(0);
    const MimoProblem p = random_problem(trial, 4, Variant::efa);
    const RelayOperators ops = assemble_operators(p);
    Rng vec_rng = trial.substream(1);
    const CMatrix F = test::random_matrix(4, 4, vec_rng);
    const cplx via_matrix = tdot(p.channels.h_rd, F * p.channels.h_rs);
    const cplx via_cascade = dot(ops.cascade, vec(F));
    CHECK(std::abs(via_matrix - via_cascade) < 1e-12 * std::abs(via_matrix));
}

TEST_CASE("no destination power makes the input covariance rank one") {
    Rng master(404);
    Rng trial = master.substream(0);
    MimoProblem p = random_problem(trial, 4, Variant::efa, PowerBudget(0.0, 0.1));
    const RelayOperators ops = assemble_operators(p);
    const Svd dec = svd(ops.input_cov);
    CHECK(dec.singular_values[0] > 0.0);
    for (std::size_t j = 1; j < 4; ++j)
        CHECK(dec.singular_values[j] < 1e-12 * dec.singular_values[0]);
}

TEST_CASE("degenerate harvest is rejected") {
    MimoProblem p;
    p.channels.h_rs = {cplx(0.0)};
    p.channels.h_rd = {cplx(0.0)};
    p.ps_ratio = 0.5;
    CHECK_THROWS_AS(assemble_operators(p), DegenerateChannel);
}

TEST_CASE("forwarded power: zero matrix and synthetic identity case") {
    Rng master(405);
    Rng trial = master.substream(0);
    const MimoProblem p = random_problem(trial, 3, Variant::efa);
    CHECK(forwarded_power(CMatrix(3, 3), p) == doctest::Approx(0.0));

    // F = I with Q = q I: (1-rho) r q + r sigma^2
    const double q = 0.7, rho = 0.3, sigma = 0.01;
    const double direct =
        forwarded_power(CMatrix::identity(3), rho, q * CMatrix::identity(3), sigma);
    CHECK(direct == doctest::Approx((1.0 - rho) * 3.0 * q + 3.0 * sigma));
}

TEST_CASE("forwarded power: trace form equals lifted quadratic form") {
    Rng master(406);
    for (std::size_t i = 0; i < 50; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 4, Variant::efa);
        const RelayOperators ops = assemble_operators(p);
        Rng mat_rng = trial.substream(1);
        const CMatrix F = test::random_matrix(4, 4, mat_rng);
        const double trace_form = forwarded_power(F, p);
        const double lifted = forwarded_power_lifted(vec(F), ops, p.noise.sigma_n_sq_watts);
        CHECK(rel_gap(trace_form, lifted) < 1e-10);
    }
}

TEST_CASE("snr rejects vectors off the constraint surface") {
    Rng master(407);
    Rng trial = master.substream(0);
    const MimoProblem p = random_problem(trial, 4, Variant::efa);
    CHECK_THROWS_AS(relay_snr(CVector(16), p), ConstraintViolated);
    const MimoSolution sol = optimize_relay_matrix(p);
    CHECK_THROWS_AS(relay_snr(2.0 * sol.relay_vec, p), ConstraintViolated);
}

TEST_CASE("snr routes agree on the constraint surface") {
    Rng master(408);
    for (std::size_t i = 0; i < 50; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 4, Variant::efa);
        const RelayOperators ops = assemble_operators(p);
        Rng dir_rng = trial.substream(1);
        const CVector f = feasible(test::random_vector(16, dir_rng), p, ops);
        const double via_channels =
            relay_snr_matrix_form(unvec(f, 4, 4), p);
        const double via_operators = relay_snr_operator_form(f, ops, p);
        CHECK(rel_gap(via_channels, via_operators) < 1e-9);
        CHECK(relay_snr(f, p, ops) == via_channels);
    }
}

TEST_CASE("r = 1 with the boundary gain reproduces the scalar SNR") {
    Rng master(409);
    for (std::size_t i = 0; i < 100; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 1, Variant::efa);
        const SisoChannel sc{p.channels.h_rs[0], p.channels.h_rd[0]};
        const double gain_sq = amplification_gain_sq(
            p.ps_ratio, total_received_power(sc, p.budgets), p.noise.sigma_n_sq_watts);
        const CVector f{cplx(std::sqrt(gain_sq), 0.0)};
        const double gamma2 = relay_snr(f, p);
        const double gamma1 =
            forwarded_snr(p.ps_ratio, gain_sq, sc, p.budgets, NoiseModel(p.noise));
        CHECK(rel_gap(gamma2, gamma1) < 1e-10);
    }
}

TEST_CASE("the full pipeline at r = 1 reproduces the SISO pipeline") {
    Rng master(410);
    for (std::size_t i = 0; i < 100; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 1, Variant::efa);
        const MimoSolution sol = optimize_relay_matrix(p);
        const SisoChannel sc{p.channels.h_rs[0], p.channels.h_rd[0]};
        const double gamma1 = snr_with_max_gain(p.ps_ratio, sc, p.budgets,
                                                NoiseModel(p.noise));
        CHECK(rel_gap(sol.snr, gamma1) < 1e-10);
    }
}

TEST_CASE("optimized snr equals the top whitened eigenvalue") {
    Rng master(411);
    for (std::size_t i = 0; i < 20; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 4, Variant::efa);
        const RelayOperators ops = assemble_operators(p);
        const CVector w = solve_upper_adjoint(ops.denominator_factor, ops.cascade);
        const double lambda = (1.0 - p.ps_ratio) * norm_sq(w);
        const MimoSolution sol = optimize_relay_matrix(p);
        const double predicted =
            p.budgets.p_s_watts * lambda / p.noise.sigma_n_sq_watts;
        CHECK(rel_gap(sol.snr, predicted) < 1e-9);
    }
}

TEST_CASE("solutions sit on the power constraint with equality") {
    Rng master(412);
    for (std::size_t i = 0; i < 30; ++i) {
        Rng trial = master.substream(i);
        for (Variant v : {Variant::efa, Variant::no_ef, Variant::genie_efa}) {
            const MimoProblem p = random_problem(trial.substream(static_cast<int>(v)), 4, v);
            const MimoSolution sol = optimize_relay_matrix(p);
            const double fwd = forwarded_power(sol.relay_matrix, p);
            const RelayOperators ops = assemble_operators(p);
            CHECK(rel_gap(fwd, ops.forward_budget) < 1e-8);
        }
    }
}

TEST_CASE("random feasible vectors never beat the optimum") {
    Rng master(413);
    for (std::size_t i = 0; i < 10; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 4, Variant::efa);
        const RelayOperators ops = assemble_operators(p);
        const MimoSolution sol = optimize_relay_matrix(p);
        Rng dir_rng = trial.substream(1);
        for (int s = 0; s < 300; ++s) {
            const CVector f = feasible(test::random_vector(16, dir_rng), p, ops);
            CHECK(relay_snr(f, p, ops) <= sol.snr * (1.0 + 1e-8));
        }
    }
}

TEST_CASE("eigeniteration path and rank-one shortcut agree") {
    Rng master(414);
    for (std::size_t i = 0; i < 334; ++i) {
        Rng trial = master.substream(i);
        for (Variant v : {Variant::efa, Variant::no_ef, Variant::genie_efa}) {
            const MimoProblem p = random_problem(trial.substream(static_cast<int>(v)), 4, v);
            const MimoSolution eig = optimize_relay_matrix(p);
            const MimoSolution direct = optimize_relay_matrix_shortcut(p);
            CHECK(rel_gap(eig.snr, direct.snr) < 1e-8);
        }
    }
}

TEST_CASE("snr is invariant to a global phase and increasing in scale") {
    Rng master(415);
    Rng trial = master.substream(0);
    const MimoProblem p = random_problem(trial, 4, Variant::efa);
    const MimoSolution sol = optimize_relay_matrix(p);

    const cplx rot = std::polar(1.0, 1.234);
    CHECK(rel_gap(relay_snr_matrix_form(unvec(rot * sol.relay_vec, 4, 4), p), sol.snr) <
          1e-12);

    double prev = 0.0;
    for (double scale = 0.2; scale <= 2.0; scale += 0.2) {
        const double snr = relay_snr_matrix_form(
            unvec(cplx(scale, 0.0) * sol.relay_vec, 4, 4), p);
        CHECK(snr > prev);
        prev = snr;
    }
}

TEST_CASE("genie operators drop only the forwarded leakage") {
    Rng master(416);
    Rng trial = master.substream(0);

    SUBCASE("without destination power genie and EFA coincide") {
        MimoProblem p = random_problem(trial, 4, Variant::efa, PowerBudget(0.0, 0.1));
        const RelayOperators efa_ops = assemble_operators(p);
        const RelayOperators genie_ops = genie_operators(p);
        CHECK(frobenius_norm(efa_ops.input_cov - genie_ops.input_cov) == 0.0);
        CHECK(efa_ops.forward_budget == genie_ops.forward_budget);
    }

    SUBCASE("genie forwarded power is never larger") {
        for (std::size_t i = 0; i < 30; ++i) {
            Rng t = master.substream(10 + i);
            MimoProblem p = random_problem(t, 4, Variant::efa);
            MimoProblem genie = p;
            genie.variant = Variant::genie_efa;
            Rng mat_rng = t.substream(1);
            const CMatrix F = test::random_matrix(4, 4, mat_rng);
            CHECK(forwarded_power(F, genie) <= forwarded_power(F, p) * (1.0 + 1e-12));
        }
    }

    SUBCASE("genie optimum dominates the EFA optimum") {
        for (std::size_t i = 0; i < 30; ++i) {
            Rng t = master.substream(50 + i);
            MimoProblem p = random_problem(t, 4, Variant::efa);
            MimoProblem genie = p;
            genie.variant = Variant::genie_efa;
            CHECK(optimize_relay_matrix(genie).snr >=
                  optimize_relay_matrix(p).snr * (1.0 - 1e-10));
        }
    }
}

TEST_CASE("grid search basics") {
    Rng master(417);
    Rng trial = master.substream(0);
    const MimoProblem p = random_problem(trial, 4, Variant::efa);
    const MimoScenario scn{p.channels, p.budgets, p.noise, Variant::efa};

    SUBCASE("singleton grid equals a direct solve") {
        const MimoSolution a = grid_search_ps(scn, {0.37});
        const MimoSolution b = optimize_relay_matrix(at_ratio(scn, 0.37));
        CHECK(a.snr == b.snr);
        CHECK(a.ps_ratio == 0.37);
    }
    SUBCASE("rates over the default grid form a unimodal curve") {
        std::vector<double> curve;
        for (double rho : default_ps_grid())
            curve.push_back(optimize_relay_matrix(at_ratio(scn, rho)).rate_bits);
        CHECK(test::is_unimodal(curve));
    }
    SUBCASE("grid must be inside the open unit interval") {
        CHECK_THROWS_AS(grid_search_ps(scn, {}), ValidationError);
        CHECK_THROWS_AS(grid_search_ps(scn, {0.0, 0.5}), ValidationError);
        CHECK_THROWS_AS(grid_search_ps(scn, {0.5, 1.0}), ValidationError);
    }
    SUBCASE("ties break toward the smaller ratio") {
        // a dead source link makes every ratio a zero-rate tie
        MimoScenario flat = scn;
        flat.channels.h_rs = CVector(4, cplx(0.0));
        const MimoSolution sol = grid_search_ps(flat, {0.6, 0.2, 0.4});
        CHECK(sol.rate_bits == 0.0);
        CHECK(sol.ps_ratio == 0.2);
    }
}

TEST_CASE("matched-filter matrix basics") {
    Rng master(418);
    Rng trial = master.substream(0);
    const ChannelRealization ch = test::draw_channels(4, trial);

    const CMatrix zero = mrcmrt_matrix(0.0, ch);
    CHECK(frobenius_norm(zero) == doctest::Approx(0.0));

    for (double eta : {0.5, 1.0, 2.5})
        CHECK(frobenius_norm(mrcmrt_matrix(eta, ch)) == doctest::Approx(eta).epsilon(1e-12));

    // scalar specialization: eta e^{-j(arg h_rd + arg h_rs)}
    Rng t1 = master.substream(1);
    const ChannelRealization c1 = test::draw_channels(1, t1);
    const CMatrix f1 = mrcmrt_matrix(0.8, c1);
    CHECK(std::abs(f1(0, 0)) == doctest::Approx(0.8).epsilon(1e-12));
    const double expected_phase = -(std::arg(c1.h_rd[0]) + std::arg(c1.h_rs[0]));
    const double phase_diff =
        std::remainder(std::arg(f1(0, 0)) - expected_phase, 2.0 * 3.14159265358979324);
    CHECK(std::abs(phase_diff) < 1e-12);

    ChannelRealization dead;
    dead.h_rs = {cplx(0.0)};
    dead.h_rd = {cplx(1.0)};
    CHECK_THROWS_AS(mrcmrt_matrix(1.0, dead), DegenerateChannel);
}

TEST_CASE("matched-filter scalarization matches the generic SNR") {
    Rng master(419);
    for (std::size_t i = 0; i < 100; ++i) {
        Rng trial = master.substream(i);
        for (Variant v : {Variant::mrcmrt_efa, Variant::mrcmrt_no_ef}) {
            const MimoProblem p = random_problem(trial.substream(static_cast<int>(v)), 4, v);
            const MimoSolution sol = mrcmrt_solution(p);
            const double generic = relay_snr_matrix_form(sol.relay_matrix, p);
            CHECK(rel_gap(generic, sol.snr) < 1e-9);
            // equality constraint holds at the returned eta
            const RelayOperators ops = assemble_operators(p);
            CHECK(rel_gap(forwarded_power(sol.relay_matrix, p), ops.forward_budget) < 1e-9);
        }
    }
}

TEST_CASE("in the scalar case the matched filter reduces to the scalar design") {
    Rng master(427);
    for (std::size_t i = 0; i < 50; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 1, Variant::mrcmrt_efa);
        const MimoSolution mf = mrcmrt_solution(p);
        const SisoChannel sc{p.channels.h_rs[0], p.channels.h_rd[0]};
        const double gamma1 = snr_with_max_gain(p.ps_ratio, sc, p.budgets,
                                                NoiseModel(p.noise));
        CHECK(rel_gap(mf.snr, gamma1) < 1e-10);
    }
}

TEST_CASE("matched filter is optimal without the energy flow") {
    Rng master(420);
    for (std::size_t i = 0; i < 100; ++i) {
        Rng trial = master.substream(i);
        MimoProblem p = random_problem(trial, 4, Variant::mrcmrt_no_ef);
        const MimoSolution mf = mrcmrt_solution(p);
        p.variant = Variant::no_ef;
        const MimoSolution full = optimize_relay_matrix(p);
        CHECK(rel_gap(mf.rate_bits, full.rate_bits) < 1e-8);
    }
}

TEST_CASE("matched filter with energy flow never beats the optimized matrix") {
    Rng master(421);
    for (std::size_t i = 0; i < 100; ++i) {
        Rng trial = master.substream(i);
        MimoProblem p = random_problem(trial, 4, Variant::mrcmrt_efa);
        const MimoSolution mf = mrcmrt_solution(p);
        p.variant = Variant::efa;
        const MimoSolution full = optimize_relay_matrix(p);
        CHECK(mf.snr <= full.snr * (1.0 + 1e-10));
    }
}

TEST_CASE("closed-form matched-filter ratio beats the grid") {
    Rng master(422);
    for (std::size_t i = 0; i < 20; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 4, Variant::mrcmrt_efa);
        const MimoScenario scn{p.channels, p.budgets, p.noise, Variant::mrcmrt_efa};
        const MimoSolution best = optimize_mrcmrt(scn);
        const MimoSolution gridded = grid_search_ps(scn, default_ps_grid());
        CHECK(best.rate_bits >= gridded.rate_bits * (1.0 - 1e-12));
        CHECK(best.ps_ratio > 0.0);
        CHECK(best.ps_ratio < 1.0);
    }
}

TEST_CASE("diagnostics: aligned rank-one matrix") {
    Rng master(423);
    Rng trial = master.substream(0);
    const ChannelRealization ch = test::draw_channels(4, trial);
    const CMatrix F = outer(conjugate(ch.h_rd), ch.h_rs);
    const DiagnosticsReport rep = diagnostics(F, ch, PowerBudget(0.5, 0.1), 0.5);
    CHECK(rep.tx_alignment[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.rx_signal_alignment[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.singular_values[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("diagnostics: alignment families are Parseval-complete") {
    Rng master(424);
    for (std::size_t i = 0; i < 20; ++i) {
        Rng trial = master.substream(i);
        const MimoProblem p = random_problem(trial, 4, Variant::efa);
        const MimoSolution sol = optimize_relay_matrix(p);
        const DiagnosticsReport rep =
            diagnostics(sol.relay_matrix, p.channels, p.budgets, p.ps_ratio);

        double sum_sv = 0.0, sum1 = 0.0, sum2 = 0.0, sum3 = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            sum_sv += rep.singular_values[j] * rep.singular_values[j];
            sum1 += rep.tx_alignment[j] * rep.tx_alignment[j];
            sum2 += rep.rx_signal_alignment[j] * rep.rx_signal_alignment[j];
            sum3 += rep.rx_leakage_alignment[j] * rep.rx_leakage_alignment[j];
            if (j > 0)
                CHECK(rep.singular_values[j] <= rep.singular_values[j - 1]);
        }
        CHECK(sum_sv == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(sum1 == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(sum2 == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(sum3 == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("diagnostics: scalar weights") {
    Rng master(425);
    Rng trial = master.substream(0);
    const ChannelRealization ch = test::draw_channels(4, trial);
    const PowerBudget pb(0.5, 0.1);
    const double rho = 0.4;
    const CMatrix F = outer(conjugate(ch.h_rd), ch.h_rs);
    const DiagnosticsReport rep = diagnostics(F, ch, pb, rho);
    CHECK(rep.signal_power_weight ==
          doctest::Approx((1.0 - rho) * pb.p_s_watts / (rho * norm_sq(ch.h_rd))));
    CHECK(rep.leakage_power_weight ==
          doctest::Approx((1.0 - rho) * pb.p_d_watts / (rho * norm_sq(ch.h_rs))));
    CHECK(rep.received_power == doctest::Approx(norm_sq(ch.h_rd) * pb.p_d_watts +
                                                norm_sq(ch.h_rs) * pb.p_s_watts));
}

TEST_CASE("diagnostics: optimized designs align their leading directions") {
    Rng master(426);
    std::size_t aligned = 0;
    const std::size_t n = 1000;
    for (std::size_t i = 0; i < n; ++i) {
        Rng trial = master.substream(i);
        MimoProblem p;
        p.channels = test::draw_channels(4, trial);
        p.budgets = PowerBudget(0.5, 0.1);
        p.noise = NoiseModel(1e-6);
        p.ps_ratio = 0.5;
        p.variant = Variant::efa;
        const MimoSolution sol = optimize_relay_matrix(p);
        const DiagnosticsReport rep =
            diagnostics(sol.relay_matrix, p.channels, p.budgets, p.ps_ratio);
        bool top1 = true, top2 = true;
        for (std::size_t j = 1; j < 4; ++j) {
            top1 = top1 && rep.tx_alignment[0] >= rep.tx_alignment[j];
            top2 = top2 && rep.rx_signal_alignment[0] >= rep.rx_signal_alignment[j];
        }
        if (top1 && top2)
            ++aligned;
    }
    CHECK(aligned >= (n * 9) / 10);
}

} // TEST_SUITE
