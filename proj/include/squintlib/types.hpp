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

#ifndef SQUINTLIB_TYPES_HPP
#define SQUINTLIB_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace squint
{

using cdouble = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using dvec = Eigen::VectorXd;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double speed_of_light = 299792458.0; // m/s, exact
inline constexpr double boltzmann_const = 1.380649e-23; // J/K, exact (SI)

// A single electrically small antenna element: the radius of the sphere
// enclosing it (which sets the Chu quality factor) and its gain.
struct AntennaElement
{
    double radius = 0.0; // m
    double gain = 1.0;   // linear

    void validate() const;
};

// Uniform linear array: N identical elements on a line with constant spacing.
struct ArrayGeometry
{
    int n_elements = 1;    // N
    double spacing = 0.0;  // m, inter-element distance
    AntennaElement element;

    // Spacing-to-radius ratio; small values mean tight coupling.
    double coupling_factor() const { return spacing / element.radius; }

    void validate() const;
};

// Point-to-point link and receiver front-end parameters.
struct LinkConfig
{
    double distance = 90.0;           // m
    double path_loss_exponent = 3.5;
    double tx_gain = 1.5;             // linear
    double rx_gain = 1.5;             // linear
    double aoa = 0.0;                 // rad, from broadside, |aoa| <= pi/2
    cdouble source_impedance{1.0, 0.0}; // ohm, generator side
    double lna_gain = 10.0;           // linear voltage gain of each LNA
    cdouble lna_impedance{1.0, 0.0};  // ohm, input impedance of each LNA
    double psi = 0.0;                 // rad, residual front-end phase

    void validate() const;
};

// Thermal noise parameters. noise_factor is linear; use
// noise_factor_from_db() when the figure is quoted in dB.
struct NoiseConfig
{
    double boltzmann = boltzmann_const; // J/K
    double temperature = 290.0;         // K
    double noise_bandwidth = 0.0;       // Hz, per-tone
    double noise_factor = 1.0;          // linear, >= 1

    void validate() const;
};

double noise_factor_from_db(double nf_db);

// Band over which averages are taken: [center - width/2, center + width/2].
struct BandSpec
{
    double center = 0.0;         // Hz
    double width = 0.0;          // Hz, >= 0
    double power_per_tone = 1.0; // W

    void validate() const;
};

// Scalar front-end constants of the weakly coupled closed forms:
// |gamma * sigma_c^2|^2 and sigma_n^2. The reference normalization sets
// both to 1 so that the array-gain ceiling is exactly N.
struct WcScalars
{
    double gamma_c2_abs2 = 1.0;
    double sigma_n2 = 1.0;
};

// One (frequency, linear SNR) point.
struct SnrSample
{
    double freq = 0.0; // Hz
    double snr = 0.0;  // linear
};

} // namespace squint

#endif
