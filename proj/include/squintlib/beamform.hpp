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

#ifndef SQUINTLIB_BEAMFORM_HPP
#define SQUINTLIB_BEAMFORM_HPP

#include <string_view>
#include <vector>

#include "squintlib/channel.hpp"
#include "squintlib/noise.hpp"
#include "squintlib/types.hpp"

namespace squint
{

// The receive beamforming strategies implemented here. All of them produce
// unit-modulus (analog, phase-only) weights.
//
//   conv       phase shifters matched to the steering vector at f_c
//   ttd_wc     true time delay with the geometric delays (ideal for
//              uncoupled arrays)
//   pop        phase-only processing: phases of R_n^-1(f_c) h(f_c)
//   td_generic time delay with caller-supplied per-element delays
//   td_i       time delay with the geometric delays (alias of ttd_wc in the
//              coupled pipeline)
//   td_ii      time delay extracted from the optimal phases at f_c
//   td_opt     per-frequency optimal delays; squint-free by construction
enum class BeamformerKind
{
    conv,
    ttd_wc,
    pop,
    td_generic,
    td_i,
    td_ii,
    td_opt,
};

std::string_view beamformer_name(BeamformerKind kind);
BeamformerKind beamformer_from_name(std::string_view name);

// A tagged weight-generating strategy. TD kinds carry exactly N delays;
// conv/pop carry the design frequency they were built at.
struct Beamformer
{
    BeamformerKind kind = BeamformerKind::conv;
    double design_freq = 0.0;
    std::vector<double> delays; // s, one per element, TD kinds only
};

// Unit-modulus weight vector at one frequency.
struct WeightVector
{
    double freq = 0.0;
    cvec weights;
};

// Conventional analog beamformer: w = a(f_c). Frequency independent.
WeightVector conv_weights(double f_c, double aoa, const ArrayGeometry &geometry);

// True-time-delay weights for the uncoupled array: entry k is
// exp(j 2 pi f k dt) with the geometric delay dt = (spacing/c) sin(aoa).
WeightVector ttd_wc_weights(double f, double aoa, const ArrayGeometry &geometry);

// Phase-only processing weights designed at f_c: the element-wise phases of
// R_n^-1(f_c) h(f_c), computed through a Hermitian solve (never an explicit
// inverse).
WeightVector pop_weights(double f_c, const ChannelState &state, const NoiseCovariance &rn);

// Generic time-delay weights: entry k is exp(j 2 pi f delays[k]).
WeightVector td_generic_weights(const std::vector<double> &delays, double f);

// Per-frequency squint-eliminating delays, extracted from the phases of
// R_n^-1(f) h(f) referenced to the first element (whose delay is therefore 0).
// Referencing removes the arbitrary global phase; the remaining phases are
// principal values, so each delay lies in (-1/(2f), 1/(2f)].
std::vector<double> optimal_delays(double f, const ChannelState &state, const NoiseCovariance &rn);

// Geometric delays (spacing/c) k sin(aoa), k = 0..N-1.
std::vector<double> td1_geometric_delays(double aoa, const ArrayGeometry &geometry);

// Optimal delays frozen at the center frequency (optimal_delays at f_c).
std::vector<double> td2_center_delays(double f_c, const ChannelState &state, const NoiseCovariance &rn);

} // namespace squint

#endif
