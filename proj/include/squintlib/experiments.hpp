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

#ifndef SQUINTLIB_EXPERIMENTS_HPP
#define SQUINTLIB_EXPERIMENTS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "squintlib/beamform.hpp"
#include "squintlib/metrics.hpp"
#include "squintlib/types.hpp"

namespace squint
{

// How the coupling model and front-end scalars are chosen:
//   weak_unity    uncoupled array, front-end scalars normalized to 1; SNRs
//                 come from the closed forms (array-gain ceiling exactly N)
//   tight_default Chu-limit elements with the cms-closed-form mutual model
//                 and the reference link parameters
//   custom        full circuit pipeline with every knob taken from the config
enum class CouplingMode
{
    weak_unity,
    tight_default,
    custom,
};

std::string_view coupling_mode_name(CouplingMode mode);
CouplingMode coupling_mode_from_name(std::string_view name);

enum class SweepKind
{
    frequency,
    bandwidth,
};

// Sweep axis: `points` samples over [lo, hi]. Frequency sweeps are uniform,
// bandwidth sweeps log-spaced.
struct SweepSpec
{
    SweepKind kind = SweepKind::frequency;
    int points = 1024;
    double lo = 0.0; // Hz
    double hi = 0.0; // Hz
};

// Complete description of one experiment run. load_scenario() fills unset
// fields from the mode's defaults table.
struct ScenarioConfig
{
    CouplingMode coupling_mode = CouplingMode::tight_default;
    ArrayGeometry geometry;
    LinkConfig link;
    NoiseConfig noise;
    BandSpec band;
    bool noise_bandwidth_auto = true; // per-tone width follows the sweep grid
    std::string mutual_model = "cms-closed-form";
    double resonance = 0.0; // Hz; 0 means "use band.center"
    std::vector<BeamformerKind> beamformers;
    SweepSpec sweep;

    double resonance_freq() const { return resonance > 0.0 ? resonance : band.center; }

    // Resolves the per-tone noise bandwidth: the explicit value, or the sweep
    // bin width (frequency sweeps) / the widest band gridded at 1024 tones
    // (bandwidth sweeps). Any constant cancels in the loss metric.
    double noise_bin_width() const;

    void validate() const;
};

// Defaults table for each mode (reference setup: f_c = 10 GHz, N = 32,
// d = 90 m, eta = 3.5, G = 1.5, rho = 10, 5 dB noise figure, 1-ohm source
// and LNA impedances, aoa = pi/3; spacing lambda_c/2 weak / 5 mm tight).
ScenarioConfig default_scenario(CouplingMode mode);

// Ready-made configs reproducing the four reference experiments
// ("fig1a", "fig1b", "fig2", "fig3").
ScenarioConfig default_figure_scenario(std::string_view figure);

// Parse a flat dotted-key config file (see README for the key set). Presence
// of `coupling_mode` is required; all other keys default per the mode.
ScenarioConfig load_scenario(const std::string &path);
ScenarioConfig parse_scenario(const std::string &text, const std::string &origin);

// Canonical text form; parse(serialize(cfg)) reproduces cfg exactly.
std::string serialize_scenario(const ScenarioConfig &cfg);

// FNV-1a hash of the canonical config text, hex-encoded. Stored in result
// metadata so CSV files can be traced back to their configuration.
std::string scenario_hash(const ScenarioConfig &cfg);

// Tabular sweep output: column names, one row per sweep point, plus run
// metadata (config hash, version, quadrature settings). Metadata is not part
// of the CSV body.
struct SweepResult
{
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> metadata;
};

struct RunOptions
{
    int threads = 1;
    bool db = false; // append derived dB columns for SNR-valued columns
};

// Instantaneous SNR vs frequency for the uncoupled reference array:
// conventional and TTD beamformers over a 2 GHz band. Requires weak_unity.
SweepResult run_fig1a(const ScenarioConfig &cfg, const RunOptions &opts);

// Average SNR vs bandwidth for the uncoupled reference array: closed form,
// small-bandwidth approximation and numerical average. Requires weak_unity.
SweepResult run_fig1b(const ScenarioConfig &cfg, const RunOptions &opts);

// Instantaneous SNR vs frequency for the tightly coupled array: POP, TD-I,
// TD-II and the per-frequency squint-free baseline over [4, 16] GHz.
SweepResult run_fig2(const ScenarioConfig &cfg, const RunOptions &opts);

// Normalized squint loss vs bandwidth for the uncoupled (conventional) and
// tightly coupled (POP) arrays at broadside, pi/3 and endfire.
SweepResult run_fig3(const ScenarioConfig &cfg, const RunOptions &opts);

// Generic sweep driven entirely by cfg.sweep and cfg.beamformers.
SweepResult run_sweep(const ScenarioConfig &cfg, const RunOptions &opts);

// CSV serialization: header line plus one line per row, 12 significant
// digits, comma separators, LF endings. Byte-deterministic for a fixed
// config and version.
std::string csv_string(const SweepResult &result);
void emit_csv(const SweepResult &result, const std::string &path);

// One checked invariant: measured value vs tolerance (interpretation of
// `measured` is check-specific; usually a max deviation).
struct ValidationItem
{
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note;
};

struct ValidationReport
{
    std::vector<ValidationItem> items;
    bool all_pass() const;
};

// Structural invariant suite over the given scenario: steering modulus,
// impedance symmetry/Toeplitz/passivity, noise Hermitian PSD, uncoupled
// reductions, phase invariance, loss scale invariance, unit-modulus weights,
// closed-form vs quadrature agreement, squint-free baselines.
ValidationReport validate_scenario(const ScenarioConfig &cfg, const RunOptions &opts);

// Fixed-width text rendering, one PASS/FAIL line per item.
std::string format_report(const ValidationReport &report);

} // namespace squint

#endif
