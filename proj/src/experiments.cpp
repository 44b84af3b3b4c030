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

#include "efa/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "efa/errors.hpp"
#include "efa/rng.hpp"
#include "efa/siso.hpp"

namespace efa {

namespace {

// Stream labels: one word per sweep family keeps draws disjoint between
// experiment types run from the same master seed.
constexpr std::uint64_t kStreamRho = 10;
constexpr std::uint64_t kStreamAntennas = 11;
constexpr std::uint64_t kStreamDistanceSiso = 12;
constexpr std::uint64_t kStreamDistanceMimo = 13;

unsigned effective_workers(const MonteCarloConfig& mc) {
    if (mc.parallelism != 0)
        return mc.parallelism;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(t) for every trial index. Work items write only into their own
// slots, so the result is independent of scheduling.
template <typename Fn>
void for_each_trial(std::size_t n, unsigned workers, const Fn& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t t = 0; t < n; ++t)
            fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= n)
                return;
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back(body);
    for (std::thread& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

// Mean and standard error accumulated in trial order.
void mean_and_se(const std::vector<double>& samples, double& mean, double& se) {
    const std::size_t n = samples.size();
    double acc = 0.0;
    for (double x : samples)
        acc += x;
    mean = acc / static_cast<double>(n);
    if (n < 2) {
        se = 0.0;
        return;
    }
    double var = 0.0;
    for (double x : samples)
        var += (x - mean) * (x - mean);
    var /= static_cast<double>(n - 1);
    se = std::sqrt(var / static_cast<double>(n));
}

void validate_common(const SweepSpec& spec, const std::vector<Variant>& allowed) {
    if (spec.sweep_values.empty())
        throw ValidationError("sweep_values must be nonempty");
    for (std::size_t i = 1; i < spec.sweep_values.size(); ++i)
        if (!(spec.sweep_values[i] > spec.sweep_values[i - 1]))
            throw ValidationError("sweep_values must be strictly increasing");
    if (spec.variants.empty())
        throw ValidationError("variants must be nonempty");
    for (Variant v : spec.variants)
        if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
            throw ValidationError(std::string("variant '") +
                                  std::string(variant_name(v)) +
                                  "' is not supported by this sweep family");
}

std::vector<double> grid_or_default(const SweepSpec& spec) {
    return spec.ps_grid.empty() ? default_ps_grid() : spec.ps_grid;
}

void sort_rows(std::vector<SweepRow>& rows) {
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.sweep_value != b.sweep_value)
            return a.sweep_value < b.sweep_value;
        return variant_name(a.variant) < variant_name(b.variant);
    });
}

} // namespace

std::string_view family_name(SweepFamily f) {
    switch (f) {
        case SweepFamily::rate_vs_rho: return "rate_vs_rho";
        case SweepFamily::rate_vs_antennas: return "rate_vs_antennas";
        case SweepFamily::rate_vs_distance_siso: return "rate_vs_distance_siso";
        case SweepFamily::rate_vs_distance_mimo: return "rate_vs_distance_mimo";
    }
    return "unknown";
}

std::optional<SweepFamily> family_from_name(std::string_view name) {
    for (SweepFamily f : {SweepFamily::rate_vs_rho, SweepFamily::rate_vs_antennas,
                          SweepFamily::rate_vs_distance_siso,
                          SweepFamily::rate_vs_distance_mimo})
        if (family_name(f) == name)
            return f;
    return std::nullopt;
}

SweepResult run_rate_vs_rho(const SweepSpec& spec, const MonteCarloConfig& mc) {
    validate_common(spec, {Variant::efa, Variant::no_ef, Variant::genie_efa,
                           Variant::mrcmrt_efa});
    for (double rho : spec.sweep_values)
        if (!(rho > 0.0) || !(rho < 1.0))
            throw ValidationError("rate_vs_rho: sweep values must lie in (0, 1)");

    // One fixed realization; this family plots a single channel draw.
    const Rng master(mc.master_seed);
    const ChannelRealization ch = realize_channels(
        spec.geometry, spec.antennas, master.substream(kStreamRho, 0, 0),
        spec.path_loss_exponent);

    SweepResult result;
    for (Variant v : spec.variants) {
        const MimoScenario scn{ch, spec.budgets, spec.noise, v};
        for (double rho : spec.sweep_values) {
            const MimoProblem p = at_ratio(scn, rho);
            const MimoSolution sol =
                variant_is_mrcmrt(v) ? mrcmrt_solution(p) : optimize_relay_matrix(p);
            result.rows.push_back({rho, v, sol.rate_bits, 0.0, 1});
        }
    }
    sort_rows(result.rows);
    return result;
}

SweepResult run_rate_vs_antennas(const SweepSpec& spec, const MonteCarloConfig& mc) {
    validate_common(spec, {Variant::efa, Variant::no_ef, Variant::genie_efa,
                           Variant::mrcmrt_efa, Variant::mrcmrt_no_ef});
    std::vector<std::size_t> counts;
    for (double v : spec.sweep_values) {
        if (!(v >= 1.0) || v != std::floor(v))
            throw ValidationError("rate_vs_antennas: sweep values must be integers >= 1");
        counts.push_back(static_cast<std::size_t>(v));
    }

    const Rng master(mc.master_seed);
    const std::vector<double> grid = grid_or_default(spec);
    const unsigned workers = effective_workers(mc);

    SweepResult result;
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const std::size_t r = counts[k];
        std::vector<std::vector<double>> rates(
            spec.variants.size(), std::vector<double>(mc.n_trials, 0.0));
        for_each_trial(mc.n_trials, workers, [&](std::size_t t) {
            const ChannelRealization ch = realize_channels(
                spec.geometry, r, master.substream(kStreamAntennas, k, t),
                spec.path_loss_exponent);
            for (std::size_t vi = 0; vi < spec.variants.size(); ++vi) {
                const MimoScenario scn{ch, spec.budgets, spec.noise, spec.variants[vi]};
                rates[vi][t] = grid_search_ps(scn, grid).rate_bits;
            }
        });
        for (std::size_t vi = 0; vi < spec.variants.size(); ++vi) {
            double mean = 0.0, se = 0.0;
            mean_and_se(rates[vi], mean, se);
            result.rows.push_back({spec.sweep_values[k], spec.variants[vi], mean, se,
                                   mc.n_trials});
        }
    }
    sort_rows(result.rows);
    return result;
}

SweepResult run_rate_vs_distance_siso(const SweepSpec& spec, const MonteCarloConfig& mc) {
    validate_common(spec, {Variant::efa, Variant::no_ef});
    for (double ratio : spec.sweep_values)
        if (!(ratio > 0.0) || !(ratio < 1.0))
            throw ValidationError("rate_vs_distance_siso: ratios must lie in (0, 1)");

    const Rng master(mc.master_seed);
    const unsigned workers = effective_workers(mc);

    SweepResult result;
    for (std::size_t k = 0; k < spec.sweep_values.size(); ++k) {
        const Geometry geom(spec.geometry.d_ds_m, spec.sweep_values[k]);
        std::vector<std::vector<double>> rates(
            spec.variants.size(), std::vector<double>(mc.n_trials, 0.0));
        for_each_trial(mc.n_trials, workers, [&](std::size_t t) {
            const ChannelRealization ch = realize_channels(
                geom, 1, master.substream(kStreamDistanceSiso, k, t),
                spec.path_loss_exponent);
            const SisoChannel sc{ch.h_rs[0], ch.h_rd[0]};
            for (std::size_t vi = 0; vi < spec.variants.size(); ++vi) {
                const SisoSolution sol =
                    spec.variants[vi] == Variant::efa
                        ? optimize_ps_closed_form(sc, spec.budgets, spec.noise)
                        : optimize_no_ef(sc, spec.budgets.p_s_watts, spec.noise);
                rates[vi][t] = sol.rate_bits;
            }
        });
        for (std::size_t vi = 0; vi < spec.variants.size(); ++vi) {
            double mean = 0.0, se = 0.0;
            mean_and_se(rates[vi], mean, se);
            result.rows.push_back({spec.sweep_values[k], spec.variants[vi], mean, se,
                                   mc.n_trials});
        }
    }
    sort_rows(result.rows);
    return result;
}

SweepResult run_rate_vs_distance_mimo(const SweepSpec& spec, const MonteCarloConfig& mc) {
    validate_common(spec, {Variant::efa, Variant::no_ef, Variant::genie_efa,
                           Variant::mrcmrt_efa, Variant::mrcmrt_no_ef});
    for (double ratio : spec.sweep_values)
        if (!(ratio > 0.0) || !(ratio < 1.0))
            throw ValidationError("rate_vs_distance_mimo: ratios must lie in (0, 1)");

    const Rng master(mc.master_seed);
    const std::vector<double> grid = grid_or_default(spec);
    const unsigned workers = effective_workers(mc);

    SweepResult result;
    for (std::size_t k = 0; k < spec.sweep_values.size(); ++k) {
        const Geometry geom(spec.geometry.d_ds_m, spec.sweep_values[k]);
        std::vector<std::vector<double>> rates(
            spec.variants.size(), std::vector<double>(mc.n_trials, 0.0));
        for_each_trial(mc.n_trials, workers, [&](std::size_t t) {
            const ChannelRealization ch = realize_channels(
                geom, spec.antennas, master.substream(kStreamDistanceMimo, k, t),
                spec.path_loss_exponent);
            for (std::size_t vi = 0; vi < spec.variants.size(); ++vi) {
                const MimoScenario scn{ch, spec.budgets, spec.noise, spec.variants[vi]};
                rates[vi][t] = grid_search_ps(scn, grid).rate_bits;
            }
        });
        for (std::size_t vi = 0; vi < spec.variants.size(); ++vi) {
            double mean = 0.0, se = 0.0;
            mean_and_se(rates[vi], mean, se);
            result.rows.push_back({spec.sweep_values[k], spec.variants[vi], mean, se,
                                   mc.n_trials});
        }
    }
    sort_rows(result.rows);
    return result;
}

SweepResult run_sweep(const SweepSpec& spec, const MonteCarloConfig& mc) {
    switch (spec.family) {
        case SweepFamily::rate_vs_rho: return run_rate_vs_rho(spec, mc);
        case SweepFamily::rate_vs_antennas: return run_rate_vs_antennas(spec, mc);
        case SweepFamily::rate_vs_distance_siso: return run_rate_vs_distance_siso(spec, mc);
        case SweepFamily::rate_vs_distance_mimo: return run_rate_vs_distance_mimo(spec, mc);
    }
    throw ValidationError("run_sweep: unknown family");
}

std::string to_csv(const SweepResult& result) {
    std::vector<SweepRow> rows = result.rows;
    sort_rows(rows);
    std::string csv = "sweep_value,variant,mean_rate_bits,std_error,n_trials\n";
    char buf[200];
    for (const SweepRow& row : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g,%s,%.17g,%.17g,%zu\n", row.sweep_value,
                      std::string(variant_name(row.variant)).c_str(), row.mean_rate_bits,
                      row.std_error, row.n_trials);
        csv += buf;
    }
    return csv;
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("emit_csv: cannot open '" + path + "' for writing");
    const std::string csv = to_csv(result);
    out.write(csv.data(), static_cast<std::streamsize>(csv.size()));
    if (!out)
        throw IoError("emit_csv: write failed for '" + path + "'");
}

} // namespace efa
