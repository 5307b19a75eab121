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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "squintlib/beamform.hpp"
#include "squintlib/channel.hpp"
#include "squintlib/errors.hpp"
#include "squintlib/experiments.hpp"
#include "squintlib/impedance.hpp"
#include "squintlib/metrics.hpp"
#include "squintlib/noise.hpp"
#include "squintlib/quadrature.hpp"
#include "squintlib/types.hpp"
#include "squintlib/version.hpp"

namespace py = pybind11;
using namespace squint;

PYBIND11_MODULE(_squintlib, m)
{
    m.doc() = "Circuit-level beam squint simulation for mutually coupled wideband arrays";
    m.attr("__version__") = version;
    m.attr("PI") = pi;
    m.attr("SPEED_OF_LIGHT") = speed_of_light;
    m.attr("BOLTZMANN_CONST") = boltzmann_const;

    py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
    py::register_exception<config_error>(m, "ConfigError", PyExc_RuntimeError);
    py::register_exception<numerical_error>(m, "NumericalError", PyExc_ArithmeticError);

    // ---- core value types -------------------------------------------------

    py::class_<AntennaElement>(m, "AntennaElement")
        .def(py::init([](double radius, double gain) {
                 return AntennaElement{radius, gain};
             }),
             py::arg("radius"), py::arg("gain") = 1.0)
        .def_readwrite("radius", &AntennaElement::radius)
        .def_readwrite("gain", &AntennaElement::gain)
        .def("validate", &AntennaElement::validate);

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def(py::init([](int n_elements, double spacing, const AntennaElement &element) {
                 return ArrayGeometry{n_elements, spacing, element};
             }),
             py::arg("n_elements"), py::arg("spacing"), py::arg("element"))
        .def_readwrite("n_elements", &ArrayGeometry::n_elements)
        .def_readwrite("spacing", &ArrayGeometry::spacing)
        .def_readwrite("element", &ArrayGeometry::element)
        .def("coupling_factor", &ArrayGeometry::coupling_factor)
        .def("validate", &ArrayGeometry::validate);

    py::class_<LinkConfig>(m, "LinkConfig")
        .def(py::init<>())
        .def_readwrite("distance", &LinkConfig::distance)
        .def_readwrite("path_loss_exponent", &LinkConfig::path_loss_exponent)
        .def_readwrite("tx_gain", &LinkConfig::tx_gain)
        .def_readwrite("rx_gain", &LinkConfig::rx_gain)
        .def_readwrite("aoa", &LinkConfig::aoa)
        .def_readwrite("source_impedance", &LinkConfig::source_impedance)
        .def_readwrite("lna_gain", &LinkConfig::lna_gain)
        .def_readwrite("lna_impedance", &LinkConfig::lna_impedance)
        .def_readwrite("psi", &LinkConfig::psi)
        .def("validate", &LinkConfig::validate);

    py::class_<NoiseConfig>(m, "NoiseConfig")
        .def(py::init<>())
        .def_readwrite("boltzmann", &NoiseConfig::boltzmann)
        .def_readwrite("temperature", &NoiseConfig::temperature)
        .def_readwrite("noise_bandwidth", &NoiseConfig::noise_bandwidth)
        .def_readwrite("noise_factor", &NoiseConfig::noise_factor)
        .def("validate", &NoiseConfig::validate);

    py::class_<BandSpec>(m, "BandSpec")
        .def(py::init([](double center, double width, double power_per_tone) {
                 return BandSpec{center, width, power_per_tone};
             }),
             py::arg("center"), py::arg("width"), py::arg("power_per_tone") = 1.0)
        .def_readwrite("center", &BandSpec::center)
        .def_readwrite("width", &BandSpec::width)
        .def_readwrite("power_per_tone", &BandSpec::power_per_tone)
        .def("validate", &BandSpec::validate);

    py::class_<WcScalars>(m, "WcScalars")
        .def(py::init([](double gamma_c2_abs2, double sigma_n2) {
                 return WcScalars{gamma_c2_abs2, sigma_n2};
             }),
             py::arg("gamma_c2_abs2") = 1.0, py::arg("sigma_n2") = 1.0)
        .def_readwrite("gamma_c2_abs2", &WcScalars::gamma_c2_abs2)
        .def_readwrite("sigma_n2", &WcScalars::sigma_n2);

    py::class_<SnrSample>(m, "SnrSample")
        .def_readonly("freq", &SnrSample::freq)
        .def_readonly("snr", &SnrSample::snr);

    m.def("noise_factor_from_db", &noise_factor_from_db, py::arg("nf_db"));

    // ---- impedance ----------------------------------------------------------

    py::class_<ImpedanceSet>(m, "ImpedanceSet")
        .def_readonly("freq", &ImpedanceSet::freq)
        .def_readonly("z_self_rx", &ImpedanceSet::z_self_rx)
        .def_readonly("z_self_tx", &ImpedanceSet::z_self_tx)
        .def_readonly("z_matrix", &ImpedanceSet::z_matrix);

    m.def("chu_self_impedance", &chu_self_impedance, py::arg("f"), py::arg("element"),
          py::arg("resonance"));
    m.def(
        "mutual_impedance",
        [](const std::string &model, double f, double separation, const AntennaElement &element) {
            return mutual_impedance(*make_mutual_model(model), f, separation, element);
        },
        py::arg("model"), py::arg("f"), py::arg("separation"), py::arg("element"));
    m.def(
        "array_impedance_matrix",
        [](const ArrayGeometry &geometry, const std::string &model, double f, double resonance) {
            return array_impedance_matrix(geometry, *make_mutual_model(model), f, resonance);
        },
        py::arg("geometry"), py::arg("model"), py::arg("f"), py::arg("resonance"));
    m.def("min_eigenvalue_re", &min_eigenvalue_re, py::arg("z_matrix"));

    // ---- channel ------------------------------------------------------------

    py::class_<ChannelState>(m, "ChannelState")
        .def_readonly("freq", &ChannelState::freq)
        .def_readonly("gamma", &ChannelState::gamma)
        .def_readonly("coupling", &ChannelState::coupling)
        .def_readonly("steering", &ChannelState::steering)
        .def_readonly("channel", &ChannelState::channel)
        .def_property_readonly("distorted_steering",
                               [](const ChannelState &s) { return s.distorted_steering(); });

    m.def("steering_vector", &steering_vector, py::arg("f"), py::arg("aoa"), py::arg("geometry"));
    m.def("path_gain", &path_gain, py::arg("f"), py::arg("link"));
    m.def("gamma_scalar", &gamma_scalar, py::arg("f"), py::arg("link"), py::arg("z_tx"),
          py::arg("z_rx_self"));
    m.def("coupling_matrix", &coupling_matrix, py::arg("z_set"), py::arg("link"));
    m.def(
        "channel_state",
        [](const ImpedanceSet &z_set, const ArrayGeometry &geometry, const LinkConfig &link) {
            return channel_state(z_set, geometry, link);
        },
        py::arg("z_set"), py::arg("geometry"), py::arg("link"));
    m.def(
        "channel_state",
        [](double f, const ArrayGeometry &geometry, const std::string &model,
           const LinkConfig &link, double resonance) {
            return channel_state(f, geometry, *make_mutual_model(model), link, resonance);
        },
        py::arg("f"), py::arg("geometry"), py::arg("model"), py::arg("link"), py::arg("resonance"));

    // ---- noise --------------------------------------------------------------

    py::class_<NoiseCovariance>(m, "NoiseCovariance")
        .def_readonly("freq", &NoiseCovariance::freq)
        .def_readonly("matrix", &NoiseCovariance::matrix);

    m.def(
        "noise_covariance",
        [](const ImpedanceSet &z_set, const LinkConfig &link, const NoiseConfig &cfg,
           bool check_psd) { return noise_covariance(z_set, link, cfg, check_psd); },
        py::arg("z_set"), py::arg("link"), py::arg("noise"), py::arg("check_psd") = false);
    m.def("weakly_coupled_scalars", &weakly_coupled_scalars, py::arg("z_set"), py::arg("link"),
          py::arg("noise"));

    // ---- beamforming ----------------------------------------------------------

    py::enum_<BeamformerKind>(m, "BeamformerKind")
        .value("conv", BeamformerKind::conv)
        .value("ttd_wc", BeamformerKind::ttd_wc)
        .value("pop", BeamformerKind::pop)
        .value("td_generic", BeamformerKind::td_generic)
        .value("td_i", BeamformerKind::td_i)
        .value("td_ii", BeamformerKind::td_ii)
        .value("td_opt", BeamformerKind::td_opt);

    m.def("beamformer_name",
          [](BeamformerKind kind) { return std::string(beamformer_name(kind)); });
    m.def("beamformer_from_name",
          [](const std::string &name) { return beamformer_from_name(name); });

    py::class_<WeightVector>(m, "WeightVector")
        .def_readonly("freq", &WeightVector::freq)
        .def_readonly("weights", &WeightVector::weights);

    m.def("conv_weights", &conv_weights, py::arg("f_c"), py::arg("aoa"), py::arg("geometry"));
    m.def("ttd_wc_weights", &ttd_wc_weights, py::arg("f"), py::arg("aoa"), py::arg("geometry"));
    m.def("pop_weights", &pop_weights, py::arg("f_c"), py::arg("state"), py::arg("rn"));
    m.def("td_generic_weights", &td_generic_weights, py::arg("delays"), py::arg("f"));
    m.def("optimal_delays", &optimal_delays, py::arg("f"), py::arg("state"), py::arg("rn"));
    m.def("td1_geometric_delays", &td1_geometric_delays, py::arg("aoa"), py::arg("geometry"));
    m.def("td2_center_delays", &td2_center_delays, py::arg("f_c"), py::arg("state"), py::arg("rn"));

    // ---- metrics and quadrature ----------------------------------------------

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init<>())
        .def_readwrite("rtol", &QuadratureSpec::rtol)
        .def_readwrite("init_panels", &QuadratureSpec::init_panels)
        .def_readwrite("max_panels", &QuadratureSpec::max_panels)
        .def_readwrite("threads", &QuadratureSpec::threads);

    m.def("average_over_interval", &average_over_interval, py::arg("fn"), py::arg("lo"),
          py::arg("hi"), py::arg("spec"));
    m.def("suggest_panels", &suggest_panels, py::arg("oscillations"), py::arg("max_panels"));

    m.def("snr_instantaneous", &snr_instantaneous, py::arg("w"), py::arg("state"), py::arg("rn"),
          py::arg("p_t"));
    m.def("snr_conv_wc_closed", &snr_conv_wc_closed, py::arg("f"), py::arg("band"), py::arg("aoa"),
          py::arg("geometry"), py::arg("scalars"));
    m.def("snr_ttd_wc", &snr_ttd_wc, py::arg("f"), py::arg("band"), py::arg("geometry"),
          py::arg("scalars"));
    m.def("avg_snr_numeric", &avg_snr_numeric, py::arg("snr_fn"), py::arg("band"),
          py::arg("quad"));
    m.def("avg_snr_theorem1", &avg_snr_theorem1, py::arg("band"), py::arg("aoa"),
          py::arg("geometry"), py::arg("scalars"));
    m.def("avg_snr_corollary1", &avg_snr_corollary1, py::arg("eps"), py::arg("aoa"),
          py::arg("geometry"), py::arg("scalars"), py::arg("p_t") = 1.0);
    m.def("squint_loss", &squint_loss, py::arg("avg_td"), py::arg("avg_x"));

    // ---- experiments ----------------------------------------------------------

    py::enum_<CouplingMode>(m, "CouplingMode")
        .value("weak_unity", CouplingMode::weak_unity)
        .value("tight_default", CouplingMode::tight_default)
        .value("custom", CouplingMode::custom);

    m.def("coupling_mode_name",
          [](CouplingMode mode) { return std::string(coupling_mode_name(mode)); });
    m.def("coupling_mode_from_name",
          [](const std::string &name) { return coupling_mode_from_name(name); });

    py::enum_<SweepKind>(m, "SweepKind")
        .value("frequency", SweepKind::frequency)
        .value("bandwidth", SweepKind::bandwidth);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("kind", &SweepSpec::kind)
        .def_readwrite("points", &SweepSpec::points)
        .def_readwrite("lo", &SweepSpec::lo)
        .def_readwrite("hi", &SweepSpec::hi);

    py::class_<ScenarioConfig>(m, "ScenarioConfig")
        .def(py::init<>())
        .def_readwrite("coupling_mode", &ScenarioConfig::coupling_mode)
        .def_readwrite("geometry", &ScenarioConfig::geometry)
        .def_readwrite("link", &ScenarioConfig::link)
        .def_readwrite("noise", &ScenarioConfig::noise)
        .def_readwrite("band", &ScenarioConfig::band)
        .def_readwrite("noise_bandwidth_auto", &ScenarioConfig::noise_bandwidth_auto)
        .def_readwrite("mutual_model", &ScenarioConfig::mutual_model)
        .def_readwrite("resonance", &ScenarioConfig::resonance)
        .def_readwrite("beamformers", &ScenarioConfig::beamformers)
        .def_readwrite("sweep", &ScenarioConfig::sweep)
        .def("resonance_freq", &ScenarioConfig::resonance_freq)
        .def("noise_bin_width", &ScenarioConfig::noise_bin_width)
        .def("validate", &ScenarioConfig::validate);

    m.def("default_scenario", &default_scenario, py::arg("mode"));
    m.def(
        "default_figure_scenario",
        [](const std::string &figure) { return default_figure_scenario(figure); },
        py::arg("figure"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("parse_scenario", &parse_scenario, py::arg("text"), py::arg("origin") = "<string>");
    m.def("serialize_scenario", &serialize_scenario, py::arg("cfg"));
    m.def("scenario_hash", &scenario_hash, py::arg("cfg"));

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("columns", &SweepResult::columns)
        .def_readonly("rows", &SweepResult::rows)
        .def_readonly("metadata", &SweepResult::metadata);

    py::class_<RunOptions>(m, "RunOptions")
        .def(py::init([](int threads, bool db) {
                 return RunOptions{threads, db};
             }),
             py::arg("threads") = 1, py::arg("db") = false)
        .def_readwrite("threads", &RunOptions::threads)
        .def_readwrite("db", &RunOptions::db);

    m.def("run_fig1a", &run_fig1a, py::arg("cfg"), py::arg("opts") = RunOptions{});
    m.def("run_fig1b", &run_fig1b, py::arg("cfg"), py::arg("opts") = RunOptions{});
    m.def("run_fig2", &run_fig2, py::arg("cfg"), py::arg("opts") = RunOptions{});
    m.def("run_fig3", &run_fig3, py::arg("cfg"), py::arg("opts") = RunOptions{});
    m.def("run_sweep", &run_sweep, py::arg("cfg"), py::arg("opts") = RunOptions{});
    m.def("csv_string", &csv_string, py::arg("result"));
    m.def("emit_csv", &emit_csv, py::arg("result"), py::arg("path"));

    py::class_<ValidationItem>(m, "ValidationItem")
        .def_readonly("name", &ValidationItem::name)
        .def_readonly("pass_", &ValidationItem::pass)
        .def_readonly("measured", &ValidationItem::measured)
        .def_readonly("tolerance", &ValidationItem::tolerance)
        .def_readonly("note", &ValidationItem::note);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("items", &ValidationReport::items)
        .def("all_pass", &ValidationReport::all_pass);

    m.def("validate_scenario", &validate_scenario, py::arg("cfg"), py::arg("opts") = RunOptions{});
    m.def("format_report", &format_report, py::arg("report"));
}
