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

#ifndef SQUINTLIB_METRICS_HPP
#define SQUINTLIB_METRICS_HPP

#include <functional>

#include "squintlib/beamform.hpp"
#include "squintlib/channel.hpp"
#include "squintlib/noise.hpp"
#include "squintlib/quadrature.hpp"
#include "squintlib/types.hpp"

namespace squint
{

// Instantaneous linear SNR of an arbitrary weight vector:
// |w^H h(f)|^2 P_T / (w^H R_n(f) w).
SnrSample snr_instantaneous(const WeightVector &w, const ChannelState &state,
                            const NoiseCovariance &rn, double p_t);

// Closed-form instantaneous SNR of the conventional beamformer on a weakly
// coupled array:
//
//   SNR(f) = (factor0 / N) sin^2(N theta/2) / sin^2(theta/2),
//   theta(f) = 2 pi (spacing/c) (f - center) sin(aoa),
//   factor0 = gamma_c2_abs2 * P_T / sigma_n2.
//
// theta is reduced modulo 2 pi and the removable singularity at theta = 0 is
// evaluated through the series N^2 (1 - (N^2-1) theta^2 / 12).
SnrSample snr_conv_wc_closed(double f, const BandSpec &band, double aoa,
                             const ArrayGeometry &geometry, const WcScalars &scalars);

// Squint-free SNR of the geometric TTD beamformer on a weakly coupled array:
// factor0 * N, constant over frequency.
SnrSample snr_ttd_wc(double f, const BandSpec &band, const ArrayGeometry &geometry,
                     const WcScalars &scalars);

// Band average of an arbitrary per-frequency SNR function via composite
// Gauss-Legendre quadrature over [center - width/2, center + width/2].
double avg_snr_numeric(const std::function<double(double)> &snr_fn, const BandSpec &band,
                       const QuadratureSpec &quad);

// Closed-form band average of the conventional weakly coupled SNR:
//
//   factor0 * [ 1 + 2 sum_{m=1}^{N-1} (1 - m/N) sinc(pi (spacing/c) m width sin(aoa)) ]
//
// with the unnormalized sinc(x) = sin(x)/x, sinc(0) = 1.
double avg_snr_theorem1(const BandSpec &band, double aoa, const ArrayGeometry &geometry,
                        const WcScalars &scalars);

// Small-bandwidth quadratic approximation of the average above:
// N factor0 [ 1 - (1/36) (pi spacing eps sin(aoa) / c)^2 (N-1)(N+1) ],
// factor0 = gamma_c2_abs2 * p_t / sigma_n2.
double avg_snr_corollary1(double eps, double aoa, const ArrayGeometry &geometry,
                          const WcScalars &scalars, double p_t = 1.0);

// Normalized squint loss in percent: (avg_td - avg_x) / avg_td * 100.
// The raw value is returned (it may be a hair negative from quadrature
// noise); avg_td must be strictly positive.
double squint_loss(double avg_td, double avg_x);

} // namespace squint

#endif
