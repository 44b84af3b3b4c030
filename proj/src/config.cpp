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

#include "efa/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "efa/errors.hpp"

namespace efa {

namespace {

using nlohmann::json;

double require_number(const json& j, const char* key) {
    if (!j.is_number())
        throw ValidationError(std::string("config field '") + key + "' must be a number");
    return j.get<double>();
}

void check_positive(double v, const char* key) {
    if (!(v > 0.0))
        throw ValidationError(std::string("config field '") + key + "' must be positive");
}

void check_unit_interval(double v, const char* key) {
    if (!(v > 0.0) || !(v < 1.0))
        throw ValidationError(std::string("config field '") + key +
                              "' must lie strictly between 0 and 1");
}

RunConfig from_json(const json& doc) {
    if (!doc.is_object())
        throw ValidationError("config root must be an object");

    static const std::set<std::string> known = {
        "family",        "d_ds_m",        "ratio_dr",       "p_d_watts",
        "p_s_watts",     "sigma_n_sq_watts", "antennas",    "path_loss_exponent",
        "variants",      "sweep_values",  "ps_grid",        "n_trials",
        "master_seed",   "parallelism",   "output",
    };
    for (const auto& item : doc.items())
        if (known.find(item.key()) == known.end())
            throw ValidationError("unknown config field '" + item.key() + "'");

    RunConfig cfg;
    if (doc.contains("family")) {
        if (!doc["family"].is_string())
            throw ValidationError("config field 'family' must be a string");
        const auto f = family_from_name(doc["family"].get<std::string>());
        if (!f)
            throw ValidationError("config field 'family' has unknown value '" +
                                  doc["family"].get<std::string>() + "'");
        cfg.family = *f;
    }
    if (doc.contains("d_ds_m")) {
        cfg.d_ds_m = require_number(doc["d_ds_m"], "d_ds_m");
        check_positive(cfg.d_ds_m, "d_ds_m");
    }
    if (doc.contains("ratio_dr")) {
        cfg.ratio_dr = require_number(doc["ratio_dr"], "ratio_dr");
        check_unit_interval(cfg.ratio_dr, "ratio_dr");
    }
    if (doc.contains("p_d_watts")) {
        cfg.p_d_watts = require_number(doc["p_d_watts"], "p_d_watts");
        if (!(cfg.p_d_watts >= 0.0))
            throw ValidationError("config field 'p_d_watts' must be nonnegative");
    }
    if (doc.contains("p_s_watts")) {
        cfg.p_s_watts = require_number(doc["p_s_watts"], "p_s_watts");
        check_positive(cfg.p_s_watts, "p_s_watts");
    }
    if (doc.contains("sigma_n_sq_watts")) {
        cfg.sigma_n_sq_watts = require_number(doc["sigma_n_sq_watts"], "sigma_n_sq_watts");
        check_positive(cfg.sigma_n_sq_watts, "sigma_n_sq_watts");
    }
    if (doc.contains("antennas")) {
        const double a = require_number(doc["antennas"], "antennas");
        if (!(a >= 1.0) || a != std::floor(a))
            throw ValidationError("config field 'antennas' must be an integer >= 1");
        cfg.antennas = static_cast<std::size_t>(a);
    }
    if (doc.contains("path_loss_exponent")) {
        cfg.path_loss_exponent = require_number(doc["path_loss_exponent"], "path_loss_exponent");
        check_positive(cfg.path_loss_exponent, "path_loss_exponent");
    }
    if (doc.contains("variants")) {
        if (!doc["variants"].is_array() || doc["variants"].empty())
            throw ValidationError("config field 'variants' must be a nonempty array");
        for (const auto& v : doc["variants"]) {
            if (!v.is_string())
                throw ValidationError("config field 'variants' must hold strings");
            const auto parsed = variant_from_name(v.get<std::string>());
            if (!parsed)
                throw ValidationError("config field 'variants' has unknown value '" +
                                      v.get<std::string>() + "'");
            cfg.variants.push_back(*parsed);
        }
    }
    if (doc.contains("sweep_values")) {
        if (!doc["sweep_values"].is_array() || doc["sweep_values"].empty())
            throw ValidationError("config field 'sweep_values' must be a nonempty array");
        for (const auto& v : doc["sweep_values"])
            cfg.sweep_values.push_back(require_number(v, "sweep_values"));
        for (std::size_t i = 1; i < cfg.sweep_values.size(); ++i)
            if (!(cfg.sweep_values[i] > cfg.sweep_values[i - 1]))
                throw ValidationError(
                    "config field 'sweep_values' must be strictly increasing");
    }
    if (doc.contains("ps_grid")) {
        const json& g = doc["ps_grid"];
        if (!g.is_object())
            throw ValidationError("config field 'ps_grid' must be an object");
        for (const auto& item : g.items())
            if (item.key() != "start" && item.key() != "step" && item.key() != "stop")
                throw ValidationError("unknown config field 'ps_grid." + item.key() + "'");
        if (g.contains("start")) cfg.ps_grid_start = require_number(g["start"], "ps_grid.start");
        if (g.contains("step")) cfg.ps_grid_step = require_number(g["step"], "ps_grid.step");
        if (g.contains("stop")) cfg.ps_grid_stop = require_number(g["stop"], "ps_grid.stop");
        check_unit_interval(cfg.ps_grid_start, "ps_grid.start");
        check_unit_interval(cfg.ps_grid_stop, "ps_grid.stop");
        check_positive(cfg.ps_grid_step, "ps_grid.step");
        if (cfg.ps_grid_stop < cfg.ps_grid_start)
            throw ValidationError("config field 'ps_grid.stop' must be >= ps_grid.start");
    }
    if (doc.contains("n_trials")) {
        const double n = require_number(doc["n_trials"], "n_trials");
        if (!(n >= 1.0) || n != std::floor(n))
            throw ValidationError("config field 'n_trials' must be an integer >= 1");
        cfg.n_trials = static_cast<std::size_t>(n);
    }
    if (doc.contains("master_seed")) {
        if (!doc["master_seed"].is_number_unsigned() && !doc["master_seed"].is_number_integer())
            throw ValidationError("config field 'master_seed' must be an unsigned integer");
        cfg.master_seed = doc["master_seed"].get<std::uint64_t>();
    }
    if (doc.contains("parallelism")) {
        const double w = require_number(doc["parallelism"], "parallelism");
        if (!(w >= 0.0) || w != std::floor(w))
            throw ValidationError("config field 'parallelism' must be an integer >= 0");
        cfg.parallelism = static_cast<unsigned>(w);
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string())
            throw ValidationError("config field 'output' must be a string");
        cfg.output = doc["output"].get<std::string>();
    }
    return cfg;
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }
    return from_json(doc);
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string config_to_text(const RunConfig& cfg) {
    json doc;
    if (cfg.family)
        doc["family"] = std::string(family_name(*cfg.family));
    doc["d_ds_m"] = cfg.d_ds_m;
    doc["ratio_dr"] = cfg.ratio_dr;
    doc["p_d_watts"] = cfg.p_d_watts;
    doc["p_s_watts"] = cfg.p_s_watts;
    doc["sigma_n_sq_watts"] = cfg.sigma_n_sq_watts;
    doc["antennas"] = cfg.antennas;
    doc["path_loss_exponent"] = cfg.path_loss_exponent;
    if (!cfg.variants.empty()) {
        json arr = json::array();
        for (Variant v : cfg.variants)
            arr.push_back(std::string(variant_name(v)));
        doc["variants"] = arr;
    }
    if (!cfg.sweep_values.empty())
        doc["sweep_values"] = cfg.sweep_values;
    doc["ps_grid"] = {{"start", cfg.ps_grid_start},
                      {"step", cfg.ps_grid_step},
                      {"stop", cfg.ps_grid_stop}};
    doc["n_trials"] = cfg.n_trials;
    doc["master_seed"] = cfg.master_seed;
    doc["parallelism"] = cfg.parallelism;
    doc["output"] = cfg.output;
    return doc.dump(2) + "\n";
}

std::vector<double> make_ps_grid(double start, double step, double stop) {
    if (!(step > 0.0))
        throw ValidationError("ps grid step must be positive");
    const std::size_t count =
        static_cast<std::size_t>(std::llround((stop - start) / step)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = start + static_cast<double>(i) * step;
    while (!grid.empty() && grid.back() > stop + 0.5 * step)
        grid.pop_back();
    return grid;
}

std::vector<double> default_sweep_values(SweepFamily family, const RunConfig& cfg) {
    switch (family) {
        case SweepFamily::rate_vs_rho:
            return make_ps_grid(cfg.ps_grid_start, cfg.ps_grid_step, cfg.ps_grid_stop);
        case SweepFamily::rate_vs_antennas:
            return {1, 2, 3, 4, 5, 6, 7, 8};
        case SweepFamily::rate_vs_distance_siso:
        case SweepFamily::rate_vs_distance_mimo:
            return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    }
    throw ValidationError("unknown sweep family");
}

std::vector<Variant> default_variants(SweepFamily family) {
    switch (family) {
        case SweepFamily::rate_vs_rho:
            return {Variant::efa, Variant::no_ef, Variant::genie_efa, Variant::mrcmrt_efa};
        case SweepFamily::rate_vs_antennas:
            return {Variant::genie_efa, Variant::efa, Variant::mrcmrt_efa};
        case SweepFamily::rate_vs_distance_siso:
            return {Variant::efa, Variant::no_ef};
        case SweepFamily::rate_vs_distance_mimo:
            return {Variant::efa, Variant::no_ef, Variant::mrcmrt_efa,
                    Variant::mrcmrt_no_ef};
    }
    throw ValidationError("unknown sweep family");
}

SweepSpec build_sweep_spec(const RunConfig& cfg, SweepFamily family) {
    SweepSpec spec;
    spec.family = family;
    spec.geometry = Geometry(cfg.d_ds_m, cfg.ratio_dr);
    spec.budgets = PowerBudget(cfg.p_d_watts, cfg.p_s_watts);
    spec.noise = NoiseModel(cfg.sigma_n_sq_watts);
    spec.antennas = cfg.antennas;
    spec.path_loss_exponent = cfg.path_loss_exponent;
    spec.sweep_values =
        cfg.sweep_values.empty() ? default_sweep_values(family, cfg) : cfg.sweep_values;
    spec.variants = cfg.variants.empty() ? default_variants(family) : cfg.variants;
    spec.ps_grid = make_ps_grid(cfg.ps_grid_start, cfg.ps_grid_step, cfg.ps_grid_stop);
    return spec;
}

MonteCarloConfig build_mc_config(const RunConfig& cfg) {
    MonteCarloConfig mc;
    mc.n_trials = cfg.n_trials;
    mc.master_seed = cfg.master_seed;
    mc.parallelism = cfg.parallelism;
    return mc;
}

} // namespace efa
