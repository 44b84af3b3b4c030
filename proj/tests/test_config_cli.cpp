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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "efa/cli.hpp"
#include "efa/config.hpp"
#include "efa/errors.hpp"

using namespace efa;

namespace {

int run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("efa-relay");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempFile {
    explicit TempFile(std::string path_, const std::string& text) : path(std::move(path_)) {
        std::ofstream out(path);
        out << text;
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string path;
};

} // namespace

TEST_SUITE("config") {

TEST_CASE("empty object yields the default scenario") {
    const RunConfig cfg = parse_config_text("{}");
    CHECK(cfg.d_ds_m == 10.0);
    CHECK(cfg.ratio_dr == 0.5);
    CHECK(cfg.p_d_watts == 0.5);
    CHECK(cfg.p_s_watts == 0.1);
    CHECK(cfg.sigma_n_sq_watts == 1e-6);
    CHECK(cfg.antennas == 4);
    CHECK(cfg.n_trials == 1000);
    CHECK(!cfg.family.has_value());
    CHECK(cfg.variants.empty());
}

TEST_CASE("malformed text raises ParseError") {
    CHECK_THROWS_AS(parse_config_text("{"), ParseError);
    CHECK_THROWS_AS(parse_config_text("not json"), ParseError);
}

TEST_CASE("out-of-range values raise ValidationError naming the field") {
    try {
        parse_config_text(R"({"ratio_dr": 1.5})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("ratio_dr") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_text(R"({"p_s_watts": 0})"), ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({"antennas": 2.5})"), ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({"sweep_values": [3, 2]})"), ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({"variants": ["nope"]})"), ValidationError);
    CHECK_THROWS_AS(parse_config_text(R"({"family": "nope"})"), ValidationError);
}

TEST_CASE("unknown keys are rejected") {
    try {
        parse_config_text(R"({"d_ds": 10})");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("d_ds") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_text(R"({"ps_grid": {"begin": 0.1}})"), ValidationError);
}

TEST_CASE("serialized configs re-parse to the same value") {
    RunConfig cfg;
    cfg.family = SweepFamily::rate_vs_distance_mimo;
    cfg.p_d_watts = 5.0;
    cfg.p_s_watts = 0.01;
    cfg.variants = {Variant::efa, Variant::mrcmrt_no_ef};
    cfg.sweep_values = {0.1, 0.5, 0.9};
    cfg.master_seed = 123456789;
    cfg.output = "fig.csv";
    const RunConfig back = parse_config_text(config_to_text(cfg));
    CHECK(back == cfg);

    const RunConfig defaults = parse_config_text("{}");
    CHECK(parse_config_text(config_to_text(defaults)) == defaults);
}

TEST_CASE("ps grid construction") {
    const std::vector<double> grid = make_ps_grid(0.01, 0.01, 0.99);
    REQUIRE(grid.size() == 99);
    CHECK(grid.front() == doctest::Approx(0.01));
    CHECK(grid.back() == doctest::Approx(0.99));
    const std::vector<double> coarse = make_ps_grid(0.1, 0.2, 0.9);
    REQUIRE(coarse.size() == 5);
    CHECK(coarse[1] == doctest::Approx(0.3));
}

TEST_CASE("family defaults") {
    const RunConfig cfg = parse_config_text("{}");
    const SweepSpec rho = build_sweep_spec(cfg, SweepFamily::rate_vs_rho);
    CHECK(rho.sweep_values.size() == 99);
    CHECK(rho.variants == std::vector<Variant>{Variant::efa, Variant::no_ef,
                                               Variant::genie_efa, Variant::mrcmrt_efa});
    const SweepSpec ant = build_sweep_spec(cfg, SweepFamily::rate_vs_antennas);
    CHECK(ant.sweep_values == std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
    const SweepSpec dist = build_sweep_spec(cfg, SweepFamily::rate_vs_distance_mimo);
    CHECK(dist.sweep_values.size() == 9);
    CHECK(dist.variants.size() == 4);
}

} // TEST_SUITE

TEST_SUITE("cli") {

TEST_CASE("no subcommand prints usage and exits 1") {
    CHECK(run({}) == 1);
    CHECK(run({"frobnicate"}) == 1);
}

TEST_CASE("bad config exits 2") {
    const TempFile cfg("test_bad_cfg.json", R"({"ratio_dr": 2.0})");
    CHECK(run({"sweep-rho", "--config", cfg.path, "--quiet"}) == 2);
    CHECK(run({"sweep-rho", "--config", "no_such_file.json", "--quiet"}) == 2);
}

TEST_CASE("family mismatch between config and subcommand exits 2") {
    const TempFile cfg("test_family_cfg.json", R"({"family": "rate_vs_antennas"})");
    CHECK(run({"sweep-rho", "--config", cfg.path, "--quiet"}) == 2);
}

TEST_CASE("sweep-rho writes one row per ratio and variant") {
    const TempFile cfg("test_rho_cfg.json",
                       R"({"family": "rate_vs_rho", "master_seed": 5})");
    const std::string out = "test_rho_out.csv";
    CHECK(run({"sweep-rho", "--config", cfg.path, "--out", out, "--quiet"}) == 0);
    const std::string csv = slurp(out);
    std::size_t lines = 0;
    for (char c : csv)
        lines += (c == '\n');
    CHECK(lines == 1 + 99 * 4);
    std::remove(out.c_str());
}

TEST_CASE("identical invocations produce byte-identical files") {
    const TempFile cfg("test_det_cfg.json",
                       R"({"family": "rate_vs_distance_siso", "n_trials": 30,
                           "sweep_values": [0.3, 0.7], "master_seed": 9})");
    CHECK(run({"sweep-distance-siso", "--config", cfg.path, "--out", "test_det_a.csv",
               "--quiet"}) == 0);
    CHECK(run({"sweep-distance-siso", "--config", cfg.path, "--out", "test_det_b.csv",
               "--quiet"}) == 0);
    CHECK(slurp("test_det_a.csv") == slurp("test_det_b.csv"));
    CHECK(!slurp("test_det_a.csv").empty());
    std::remove("test_det_a.csv");
    std::remove("test_det_b.csv");
}

TEST_CASE("seed and trials overrides change the run") {
    const TempFile cfg("test_ovr_cfg.json",
                       R"({"family": "rate_vs_distance_siso", "n_trials": 10,
                           "sweep_values": [0.5]})");
    CHECK(run({"sweep-distance-siso", "--config", cfg.path, "--out", "test_ovr_a.csv",
               "--seed", "1", "--quiet"}) == 0);
    CHECK(run({"sweep-distance-siso", "--config", cfg.path, "--out", "test_ovr_b.csv",
               "--seed", "2", "--quiet"}) == 0);
    CHECK(slurp("test_ovr_a.csv") != slurp("test_ovr_b.csv"));
    CHECK(run({"sweep-distance-siso", "--config", cfg.path, "--out", "test_ovr_c.csv",
               "--seed", "1", "--trials", "11", "--quiet"}) == 0);
    CHECK(slurp("test_ovr_c.csv").find(",11\n") != std::string::npos);
    std::remove("test_ovr_a.csv");
    std::remove("test_ovr_b.csv");
    std::remove("test_ovr_c.csv");
}

TEST_CASE("optimize prints a design") {
    CHECK(run({"optimize", "--seed", "3", "--quiet"}) == 0);
}

TEST_CASE("verify exits 0 on a healthy build") {
    CHECK(run({"verify", "--seed", "42", "--quiet"}) == 0);
}

} // TEST_SUITE
