# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the Python bindings.

Deep numerical coverage lives in the C++ suites; these tests only confirm
that the extension module loads and that a few reference values survive the
binding layer bit-for-bit.
"""

import math

import numpy as np
import pytest

import squintlib as sq


def rel(a, b):
    return abs(a - b) / abs(b)


def tight_scenario():
    cfg = sq.default_scenario(sq.CouplingMode.tight_default)
    cfg.noise.noise_bandwidth = 12e9 / 1023.0
    return cfg


def test_version():
    assert sq.__version__ == "0.1.0"


def test_constants():
    assert sq.SPEED_OF_LIGHT == 299792458.0
    assert sq.BOLTZMANN_CONST == 1.380649e-23


def test_steering_vector_unit_modulus():
    geo = sq.ArrayGeometry(32, 0.015, sq.AntennaElement(0.005, 1.0))
    a = sq.steering_vector(10e9, math.pi / 3, geo)
    assert a.shape == (32,)
    assert np.max(np.abs(np.abs(a) - 1.0)) < 1e-15
    assert a[0] == 1.0 + 0.0j


def test_chu_self_impedance_reference_value():
    element = sq.AntennaElement(0.005 / 2.6, 1.0)
    z = sq.chu_self_impedance(8e9, element, 10e9)
    assert rel(z, 1.0 - 7.9894742648253452j) < 1e-14
    assert sq.chu_self_impedance(10e9, element, 10e9) == 1.0 + 0.0j


def test_mutual_impedance_reference_value():
    element = sq.AntennaElement(0.005 / 2.6, 1.0)
    z = sq.mutual_impedance("cms-closed-form", 10e9, 0.005, element)
    assert rel(z, 0.89440618028681662 + 3.6687152311244087j) < 1e-14


def test_avg_snr_theorem1_reference_value():
    spacing = sq.SPEED_OF_LIGHT / (2.0 * 10e9)
    geo = sq.ArrayGeometry(32, spacing, sq.AntennaElement(spacing / 2.6, 1.0))
    avg = sq.avg_snr_theorem1(sq.BandSpec(10e9, 2e9), math.pi / 3, geo, sq.WcScalars())
    assert rel(avg, 10.63300625621318) < 1e-13


def test_coupled_pipeline_center_frequency():
    cfg = tight_scenario()
    fc = cfg.band.center
    z = sq.array_impedance_matrix(cfg.geometry, cfg.mutual_model, fc, cfg.resonance_freq())
    assert np.allclose(z.z_matrix, z.z_matrix.T, rtol=0.0, atol=0.0)
    state = sq.channel_state(z, cfg.geometry, cfg.link)
    rn = sq.noise_covariance(z, cfg.link, cfg.noise)
    w = sq.pop_weights(fc, state, rn)
    assert np.max(np.abs(np.abs(w.weights) - 1.0)) < 1e-14
    snr = sq.snr_instantaneous(w, state, rn, 1.0).snr
    assert rel(snr, 208.7540207387824) < 1e-12


def test_run_fig1a_shape_and_ttd_row():
    result = sq.run_fig1a(sq.default_figure_scenario("fig1a"), sq.RunOptions())
    assert result.columns == ["freq_hz", "snr_conv", "snr_ttd"]
    assert len(result.rows) == 1024
    ttd = np.array(result.rows)[:, 2]
    assert np.max(np.abs(ttd - 32.0) / 32.0) < 1e-10


def test_csv_deterministic_across_threads():
    cfg = sq.default_figure_scenario("fig1a")
    csv1 = sq.csv_string(sq.run_fig1a(cfg, sq.RunOptions(threads=1)))
    csv4 = sq.csv_string(sq.run_fig1a(cfg, sq.RunOptions(threads=4)))
    assert csv1 == csv4
    assert csv1.startswith("freq_hz,snr_conv,snr_ttd\n")


def test_squint_loss():
    assert sq.squint_loss(32.0, 16.0) == 50.0
    with pytest.raises(ValueError):
        sq.squint_loss(0.0, 1.0)


def test_parse_scenario_errors():
    with pytest.raises(RuntimeError, match="coupling_mode"):
        sq.parse_scenario("", "empty.cfg")


def test_scenario_round_trip():
    cfg = sq.default_scenario(sq.CouplingMode.weak_unity)
    text = sq.serialize_scenario(cfg)
    again = sq.parse_scenario(text, "round-trip")
    assert sq.serialize_scenario(again) == text
    assert sq.scenario_hash(again) == sq.scenario_hash(cfg)
