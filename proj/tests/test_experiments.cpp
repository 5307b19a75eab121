// SPDX-License-Identifier: Apache-2.0
//
// squintlib - beam squint simulation for mutually coupled wideband arrays
// Copyright (C) 2026 squintlib contributors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "squintlib/errors.hpp"
#include "squintlib/experiments.hpp"
#include "squintlib/version.hpp"

using namespace squint;

namespace
{

bool message_contains(const std::exception &e, const std::string &needle)
{
    return std::string(e.what()).find(needle) != std::string::npos;
}

std::size_t column_index(const SweepResult &r, const std::string &name)
{
    for (std::size_t j = 0; j < r.columns.size(); ++j)
        if (r.columns[j] == name)
            return j;
    FAIL("missing column " + name);
    return 0;
}

bool rel_close(double a, double b, double rtol)
{
    return std::abs(a - b) <= rtol * std::abs(b);
}

} // namespace

TEST_CASE("coupling_mode_name - round trip")
{
    for (CouplingMode m : {CouplingMode::weak_unity, CouplingMode::tight_default, CouplingMode::custom})
        CHECK(coupling_mode_from_name(coupling_mode_name(m)) == m);
    CHECK_THROWS_AS(coupling_mode_from_name("loose"), config_error);
}

TEST_CASE("default_scenario - reference parameter sets validate")
{
    ScenarioConfig weak = default_scenario(CouplingMode::weak_unity);
    CHECK_NOTHROW(weak.validate());
    CHECK(weak.geometry.n_elements == 32);
    CHECK(weak.geometry.spacing == Catch::Approx(speed_of_light / 2e10).epsilon(1e-15));
    CHECK(weak.mutual_model == "zero");
    CHECK(weak.band.center == 10e9);
    CHECK(weak.band.width == 2e9);

    ScenarioConfig tight = default_scenario(CouplingMode::tight_default);
    CHECK_NOTHROW(tight.validate());
    CHECK(tight.geometry.spacing == 0.005);
    CHECK(tight.geometry.coupling_factor() == Catch::Approx(2.6).epsilon(1e-15));
    CHECK(tight.mutual_model == "cms-closed-form");
    CHECK(tight.noise.noise_factor == Catch::Approx(std::pow(10.0, 0.5)).epsilon(1e-15));
    CHECK(tight.link.aoa == Catch::Approx(pi / 3).epsilon(1e-15));
    CHECK(tight.sweep.lo == 4e9);
    CHECK(tight.sweep.hi == 16e9);
}

TEST_CASE("parse_scenario - round trip through the serialized form")
{
    ScenarioConfig tight = default_scenario(CouplingMode::tight_default);
    std::string text = serialize_scenario(tight);
    ScenarioConfig back = parse_scenario(text, "roundtrip");
    CHECK(serialize_scenario(back) == text);
    CHECK(scenario_hash(back) == scenario_hash(tight));

    ScenarioConfig weak = default_scenario(CouplingMode::weak_unity);
    CHECK(serialize_scenario(parse_scenario(serialize_scenario(weak), "roundtrip")) ==
          serialize_scenario(weak));
}

TEST_CASE("parse_scenario - empty input names the first required key")
{
    try
    {
        parse_scenario("", "empty.cfg");
        FAIL("expected config_error");
    }
    catch (const config_error &e)
    {
        CHECK(message_contains(e, "empty.cfg"));
        CHECK(message_contains(e, "missing required key 'coupling_mode'"));
    }
}

TEST_CASE("parse_scenario - malformed input diagnostics")
{
    std::string base = serialize_scenario(default_scenario(CouplingMode::tight_default));

    try
    {
        parse_scenario(base + "link.aoa = 0.5\n", "dup.cfg");
        FAIL("expected config_error");
    }
    catch (const config_error &e)
    {
        CHECK(message_contains(e, "duplicate key 'link.aoa'"));
    }

    try
    {
        parse_scenario(base + "geometry.gain = 2\n", "unk.cfg");
        FAIL("expected config_error");
    }
    catch (const config_error &e)
    {
        CHECK(message_contains(e, "unknown key 'geometry.gain'"));
    }

    try
    {
        parse_scenario("coupling_mode = tight-default\nband.center = fast\n", "bad.cfg");
        FAIL("expected config_error");
    }
    catch (const config_error &e)
    {
        CHECK(message_contains(e, "bad.cfg"));
        CHECK(message_contains(e, "band.center"));
    }

    // Out-of-range values surface as config errors with the origin attached.
    try
    {
        parse_scenario("coupling_mode = tight-default\nsweep.points = 1\n", "rng.cfg");
        FAIL("expected config_error");
    }
    catch (const config_error &e)
    {
        CHECK(message_contains(e, "sweep.points"));
    }
}

TEST_CASE("load_scenario - reads files and reports unreadable paths")
{
    std::string path = "test_scenario_tmp.cfg";
    {
        std::ofstream out(path);
        out << "coupling_mode = weak-unity\nlink.aoa = 0.5\n";
    }
    ScenarioConfig cfg = load_scenario(path);
    CHECK(cfg.coupling_mode == CouplingMode::weak_unity);
    CHECK(cfg.link.aoa == 0.5);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_scenario("does_not_exist.cfg"), config_error);
}

TEST_CASE("scenario_hash - 16 hex digits, sensitive to every field")
{
    ScenarioConfig cfg = default_scenario(CouplingMode::tight_default);
    std::string h = scenario_hash(cfg);
    REQUIRE(h.size() == 16);
    CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);

    ScenarioConfig other = cfg;
    other.link.aoa += 1e-9;
    CHECK(scenario_hash(other) != h);
    CHECK(scenario_hash(cfg) == h);
}

TEST_CASE("csv_string - formatting contract")
{
    SweepResult r;
    r.columns = {"freq_hz", "snr"};
    CHECK(csv_string(r) == "freq_hz,snr\n");

    r.rows.push_back({9e9, 1234.567890123456});
    r.rows.push_back({1.25e10, 0.5});
    std::string csv = csv_string(r);
    CHECK(csv == "freq_hz,snr\n9000000000,1234.56789012\n12500000000,0.5\n");
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("run_fig1a - uncoupled reference sweep")
{
    ScenarioConfig cfg = default_figure_scenario("fig1a");
    SweepResult r = run_fig1a(cfg, RunOptions{});

    REQUIRE(r.columns == std::vector<std::string>{"freq_hz", "snr_conv", "snr_ttd"});
    REQUIRE(r.rows.size() == 1024);
    CHECK(r.rows.front()[0] == 9e9);
    CHECK(r.rows.back()[0] == 11e9);

    std::size_t conv = column_index(r, "snr_conv"), ttd = column_index(r, "snr_ttd");
    for (const auto &row : r.rows)
    {
        CHECK(std::abs(row[ttd] - 32.0) <= 32.0 * 1e-10);
        CHECK(row[conv] <= 32.0 * (1.0 + 1e-12));
        CHECK(row[conv] >= 0.0);
    }

    // Independent brute-force array factor at a few rows.
    for (std::size_t i : {std::size_t{0}, std::size_t{100}, std::size_t{777}})
    {
        double f = r.rows[i][0];
        double theta = 2.0 * pi * cfg.geometry.spacing / speed_of_light * (f - cfg.band.center) *
                       std::sin(cfg.link.aoa);
        cdouble acc{0.0, 0.0};
        for (int k = 0; k < 32; ++k)
            acc += std::polar(1.0, theta * k);
        CHECK(rel_close(r.rows[i][conv], std::norm(acc) / 32.0, 1e-10));
    }

    // Requires the uncoupled mode.
    CHECK_THROWS_AS(run_fig1a(default_scenario(CouplingMode::tight_default), RunOptions{}),
                    config_error);
}

TEST_CASE("run_fig1b - closed form, approximation and quadrature")
{
    ScenarioConfig cfg = default_figure_scenario("fig1b");
    SweepResult r = run_fig1b(cfg, RunOptions{});

    REQUIRE(r.columns == std::vector<std::string>{"bandwidth_hz", "avg_snr_theorem1",
                                                  "avg_snr_corollary1", "avg_snr_numeric"});
    REQUIRE(r.rows.size() == 64);
    CHECK(r.rows.front()[0] == 1e7);
    CHECK(r.rows.back()[0] == 2e9);

    std::size_t th = column_index(r, "avg_snr_theorem1");
    std::size_t co = column_index(r, "avg_snr_corollary1");
    std::size_t nu = column_index(r, "avg_snr_numeric");
    double prev = 33.0;
    for (const auto &row : r.rows)
    {
        CHECK(std::abs(row[th] - row[nu]) <= 1e-8 * row[th]);
        if (row[0] <= 0.02 * cfg.band.center)
            CHECK(std::abs(row[co] - row[th]) < 0.01 * row[th]);
        CHECK(row[th] <= prev + 1e-12); // monotone in bandwidth
        prev = row[th];
    }
}

TEST_CASE("run_fig2 - coupled sweep against independently derived values")
{
    ScenarioConfig cfg = default_figure_scenario("fig2");
    SweepResult r = run_fig2(cfg, RunOptions{});

    REQUIRE(r.columns == std::vector<std::string>{"freq_hz", "snr_pop", "snr_td1", "snr_td2",
                                                  "snr_baseline"});
    REQUIRE(r.rows.size() == 1024);

    // Row 0 is exactly 4 GHz, row 1023 exactly 16 GHz; values cross-checked
    // against a separate dense-linear-algebra implementation.
    const auto &lo = r.rows.front();
    CHECK(lo[0] == 4e9);
    CHECK(rel_close(lo[1], 8.8270081072597506, 1e-12));
    CHECK(rel_close(lo[2], 24.127134565803132, 1e-12));
    CHECK(rel_close(lo[3], 6.0051788910894022, 1e-12));
    CHECK(rel_close(lo[4], 53.164569466010946, 1e-12));

    const auto &hi = r.rows.back();
    CHECK(hi[0] == 16e9);
    CHECK(rel_close(hi[1], 0.28986782720071069, 1e-12));
    CHECK(rel_close(hi[2], 15.830187712603617, 1e-12));
    CHECK(rel_close(hi[3], 0.12950339297272942, 1e-12));
    CHECK(rel_close(hi[4], 15.861474212614551, 1e-12));

    // The phase-extracted baseline is not the exact constant-modulus optimum:
    // in a narrow window below the resonance the center-frequency designs beat
    // it by a few tenths of a percent. Pin that envelope, require strict
    // dominance away from the window, and check every column against the
    // unconstrained matched-filter bound, which dominates by construction.
    double max_excess = 0.0;
    for (const auto &row : r.rows)
        for (std::size_t j = 1; j <= 3; ++j)
        {
            max_excess = std::max(max_excess, (row[j] - row[4]) / row[4]);
            if (row[0] < 9.6e9 || row[0] > 10.4e9)
                CHECK(row[j] <= row[4] * (1.0 + 1e-9));
        }
    CHECK(max_excess < 6e-3);

    auto model = make_mutual_model(cfg.mutual_model);
    NoiseConfig nz = cfg.noise;
    nz.noise_bandwidth = cfg.noise_bin_width();
    for (std::size_t i = 0; i < r.rows.size(); ++i)
    {
        const auto &row = r.rows[i];
        bool in_window = row[0] >= 9.6e9 && row[0] <= 10.4e9;
        if (i % 64 != 0 && !in_window)
            continue;
        ImpedanceSet z = array_impedance_matrix(cfg.geometry, *model, row[0], cfg.resonance_freq());
        ChannelState st = channel_state(z, cfg.geometry, cfg.link);
        NoiseCovariance rn = noise_covariance(z, cfg.link, nz);
        cvec x = rn.matrix.ldlt().solve(st.channel);
        double mf_bound = cfg.band.power_per_tone * st.channel.dot(x).real();
        for (std::size_t j = 1; j <= 4; ++j)
            CHECK(row[j] <= mf_bound * (1.0 + 1e-9));
    }
}

TEST_CASE("run_sweep - coupled band averages against independently derived values")
{
    ScenarioConfig cfg = default_scenario(CouplingMode::tight_default);
    cfg.sweep.kind = SweepKind::bandwidth;
    cfg.sweep.points = 2;
    cfg.sweep.lo = 1e9;
    cfg.sweep.hi = 2e9;
    cfg.noise.noise_bandwidth = 12e9 / 1023.0;
    cfg.noise_bandwidth_auto = false;

    SweepResult r = run_sweep(cfg, RunOptions{});
    REQUIRE(r.columns == std::vector<std::string>{"bandwidth_hz", "avg_snr_pop", "avg_snr_td1",
                                                  "avg_snr_td2", "avg_snr_tdopt"});
    REQUIRE(r.rows.size() == 2);
    const auto &row = r.rows.back();
    CHECK(row[0] == 2e9);
    CHECK(rel_close(row[1], 170.16664821300787, 2e-9));
    CHECK(rel_close(row[2], 191.32986667997292, 2e-9));
    CHECK(rel_close(row[3], 170.4967263046388, 2e-9));
    CHECK(rel_close(row[4], 209.63396030419389, 2e-9));
}

TEST_CASE("run_fig3 - squint loss bandwidth sweep at the band extremes")
{
    ScenarioConfig cfg = default_figure_scenario("fig3");
    cfg.sweep.points = 2;
    SweepResult r = run_fig3(cfg, RunOptions{});

    REQUIRE(r.columns ==
            std::vector<std::string>{"bandwidth_hz", "loss_wc_conv_phi0", "loss_wc_conv_phi60",
                                     "loss_wc_conv_phi90", "loss_tc_pop_phi0", "loss_tc_pop_phi60",
                                     "loss_tc_pop_phi90"});
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0][0] == 1e8);
    CHECK(r.rows[1][0] == 12e9);

    // Broadside is squint-free for the uncoupled array at any bandwidth.
    CHECK(std::abs(r.rows[0][1]) <= 1e-10);
    CHECK(std::abs(r.rows[1][1]) <= 1e-10);

    // Coupled broadside losses, cross-checked against the dense reference.
    CHECK(rel_close(r.rows[0][4], 0.028256123851, 1e-6));
    CHECK(rel_close(r.rows[1][4], 11.321795203335, 1e-9));

    // Losses grow with the angle of arrival and stay inside [0, 100].
    for (const auto &row : r.rows)
    {
        CHECK(row[2] <= row[3] + 1e-9);
        CHECK(row[5] <= row[6] + 1e-9);
        for (std::size_t j = 1; j < row.size(); ++j)
        {
            CHECK(row[j] >= -1e-9);
            CHECK(row[j] <= 100.0);
        }
    }
}

TEST_CASE("run_fig2 - identical output for any thread count")
{
    ScenarioConfig cfg = default_figure_scenario("fig2");
    RunOptions serial{1, false};
    RunOptions parallel{4, false};
    CHECK(csv_string(run_fig2(cfg, serial)) == csv_string(run_fig2(cfg, parallel)));
}

TEST_CASE("run_fig1a - optional derived dB columns")
{
    ScenarioConfig cfg = default_figure_scenario("fig1a");
    SweepResult r = run_fig1a(cfg, RunOptions{1, true});
    REQUIRE(r.columns == std::vector<std::string>{"freq_hz", "snr_conv", "snr_ttd", "snr_conv_db",
                                                  "snr_ttd_db"});
    std::size_t conv = 1, conv_db = 3;
    for (std::size_t i : {std::size_t{0}, std::size_t{512}})
        CHECK(r.rows[i][conv_db] ==
              Catch::Approx(10.0 * std::log10(r.rows[i][conv])).epsilon(1e-12));
}

TEST_CASE("result metadata - traceability fields")
{
    ScenarioConfig cfg = default_figure_scenario("fig1a");
    SweepResult r = run_fig1a(cfg, RunOptions{});
    bool saw_hash = false, saw_version = false;
    for (const auto &[key, value] : r.metadata)
    {
        if (key == "config_hash")
        {
            saw_hash = true;
            CHECK(value == scenario_hash(cfg));
        }
        if (key == "version")
        {
            saw_version = true;
            CHECK(value == version);
        }
    }
    CHECK(saw_hash);
    CHECK(saw_version);
}

TEST_CASE("validate_scenario - reference configurations pass every check")
{
    RunOptions opts{1, false};
    ValidationReport report = validate_scenario(default_scenario(CouplingMode::weak_unity), opts);
    CHECK(report.all_pass());
    for (const auto &item : report.items)
    {
        INFO(item.name << " measured " << item.measured << " tol " << item.tolerance);
        CHECK(item.pass);
    }
    std::string text = format_report(report);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("checks passed") != std::string::npos);
}
