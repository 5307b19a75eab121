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

#ifndef SQUINTLIB_CHANNEL_HPP
#define SQUINTLIB_CHANNEL_HPP

#include "squintlib/impedance.hpp"
#include "squintlib/types.hpp"

namespace squint
{

// Everything the downstream SNR computation needs at one frequency:
// h(f) = gamma(f) P(f) a(f). The coupling-distorted steering vector equals
// the channel itself for a single line-of-sight path.
struct ChannelState
{
    double freq = 0.0;
    cdouble gamma{};  // scalar front-end gain
    cmat coupling;    // P(f) = (Z_R(f) + Z_LNA I)^-1
    cvec steering;    // a(f), unit-modulus entries
    cvec channel;     // h(f) = gamma * P * a

    const cvec &distorted_steering() const { return channel; }
};

// Plane-wave steering vector of a ULA. Entry k (0-based) is
// exp(j 2 pi f (spacing/c) k sin(aoa)); the first entry is always 1.
cvec steering_vector(double f, double aoa, const ArrayGeometry &geometry);

// Far-field path gain beta(f) = G_T G_R (c / (2 pi f d^(eta/2)))^2.
// Strictly positive and decreasing in both f and d.
double path_gain(double f, const LinkConfig &link);

// Scalar front-end gain gamma(f) = rho Z_LNA sqrt(re(Z_T) re(Z_R) beta(f))
// * Q(f) * e^(j psi) with Q(f) = 1/(Z_T + Z_G). |gamma| does not depend
// on psi.
cdouble gamma_scalar(double f, const LinkConfig &link, cdouble z_tx, cdouble z_rx_self);

// Coupling matrix P(f) = (Z_R(f) + Z_LNA I)^-1, computed through an LU solve.
// The solution is rejected when the system is numerically singular or the
// residual ||(Z_R + Z_LNA I) P - I||_max exceeds 1e-10.
cmat coupling_matrix(const ImpedanceSet &z_set, const LinkConfig &link);

// Full per-frequency channel construction from geometry + impedance model.
ChannelState channel_state(double f, const ArrayGeometry &geometry, const MutualImpedanceModel &model,
                           const LinkConfig &link, double resonance);

// Same, reusing an already-assembled impedance set (avoids a second matrix
// assembly when the caller also needs Z_R for the noise covariance).
ChannelState channel_state(const ImpedanceSet &z_set, const ArrayGeometry &geometry,
                           const LinkConfig &link);

} // namespace squint

#endif
