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

#include <cmath>

#include "squintlib/errors.hpp"
#include "squintlib/metrics.hpp"

namespace squint
{

SnrSample snr_instantaneous(const WeightVector &w, const ChannelState &state,
                            const NoiseCovariance &rn, double p_t)
{
    if (w.weights.size() != state.channel.size() || rn.matrix.rows() != state.channel.size())
        throw domain_error("snr_instantaneous: dimension mismatch");
    if (!(p_t > 0.0))
        throw domain_error("snr_instantaneous: transmit power must be positive");

    double num = std::norm(w.weights.dot(state.channel));
    double den = w.weights.dot(rn.matrix * w.weights).real();
    if (!(den > 0.0))
        throw numerical_error("snr_instantaneous: noise quadratic form is not positive");

    return {state.freq, num * p_t / den};
}

// Squared array factor |sum_k e^(jk theta)|^2 with the removable singularity
// at theta = 0 (mod 2 pi) evaluated through its series.
static double array_factor_sq(double theta, int n)
{
    double t = std::remainder(theta, 2.0 * pi);
    double nn = static_cast<double>(n);
    if (std::abs(t) < 1e-7)
        return nn * nn * (1.0 - (nn * nn - 1.0) * t * t / 12.0);
    double s = std::sin(0.5 * nn * t) / std::sin(0.5 * t);
    return s * s;
}

static double wc_factor0(const BandSpec &band, const WcScalars &scalars)
{
    return scalars.gamma_c2_abs2 * band.power_per_tone / scalars.sigma_n2;
}

SnrSample snr_conv_wc_closed(double f, const BandSpec &band, double aoa,
                             const ArrayGeometry &geometry, const WcScalars &scalars)
{
    const int n = geometry.n_elements;
    double theta =
        2.0 * pi * geometry.spacing / speed_of_light * (f - band.center) * std::sin(aoa);
    double snr = wc_factor0(band, scalars) / n * array_factor_sq(theta, n);
    return {f, snr};
}

SnrSample snr_ttd_wc(double f, const BandSpec &band, const ArrayGeometry &geometry,
                     const WcScalars &scalars)
{
    return {f, wc_factor0(band, scalars) * geometry.n_elements};
}

double avg_snr_numeric(const std::function<double(double)> &snr_fn, const BandSpec &band,
                       const QuadratureSpec &quad)
{
    if (!(band.width > 0.0))
        throw domain_error("avg_snr_numeric: band width must be positive");
    return average_over_interval(snr_fn, band.center - band.width / 2.0,
                                 band.center + band.width / 2.0, quad);
}

double avg_snr_theorem1(const BandSpec &band, double aoa, const ArrayGeometry &geometry,
                        const WcScalars &scalars)
{
    const int n = geometry.n_elements;
    const double base = pi * geometry.spacing / speed_of_light * band.width * std::sin(aoa);

    double sum = 0.0;
    for (int m = 1; m < n; ++m)
    {
        double x = base * m;
        double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
        sum += (1.0 - static_cast<double>(m) / n) * sinc;
    }
    return wc_factor0(band, scalars) * (1.0 + 2.0 * sum);
}

double avg_snr_corollary1(double eps, double aoa, const ArrayGeometry &geometry,
                          const WcScalars &scalars, double p_t)
{
    const double n = geometry.n_elements;
    double x = pi * geometry.spacing * eps * std::sin(aoa) / speed_of_light;
    double factor0 = scalars.gamma_c2_abs2 * p_t / scalars.sigma_n2;
    return n * factor0 * (1.0 - x * x * (n - 1.0) * (n + 1.0) / 36.0);
}

double squint_loss(double avg_td, double avg_x)
{
    if (!(avg_td > 0.0))
        throw domain_error("squint_loss: reference average SNR must be positive");
    return (avg_td - avg_x) / avg_td * 100.0;
}

} // namespace squint
