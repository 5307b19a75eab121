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
#include <sstream>

#include "squintlib/channel.hpp"
#include "squintlib/errors.hpp"

namespace squint
{

cvec steering_vector(double f, double aoa, const ArrayGeometry &geometry)
{
    geometry.validate();

    const int n = geometry.n_elements;
    const double step = 2.0 * pi * f * geometry.spacing / speed_of_light * std::sin(aoa);

    cvec a(n);
    for (int k = 0; k < n; ++k)
        a(k) = std::polar(1.0, step * k);
    return a;
}

double path_gain(double f, const LinkConfig &link)
{
    if (!(f > 0.0))
        throw domain_error("path_gain: frequency must be positive");

    double denom = 2.0 * pi * f * std::pow(link.distance, link.path_loss_exponent / 2.0);
    double root = speed_of_light / denom;
    return link.tx_gain * link.rx_gain * root * root;
}

cdouble gamma_scalar(double f, const LinkConfig &link, cdouble z_tx, cdouble z_rx_self)
{
    if (!(z_tx.real() >= 0.0) || !(z_rx_self.real() >= 0.0))
        throw domain_error("gamma_scalar: antenna resistances must be nonnegative");

    cdouble denom = z_tx + link.source_impedance;
    if (std::abs(denom) == 0.0)
        throw numerical_error("gamma_scalar: transmit impedance cancels the source impedance");

    double beta = path_gain(f, link);
    double root = std::sqrt(z_tx.real() * z_rx_self.real() * beta);
    return link.lna_gain * link.lna_impedance * root * std::polar(1.0, link.psi) / denom;
}

cmat coupling_matrix(const ImpedanceSet &z_set, const LinkConfig &link)
{
    const auto n = z_set.z_matrix.rows();
    cmat loaded = z_set.z_matrix;
    loaded.diagonal().array() += link.lna_impedance;

    Eigen::PartialPivLU<cmat> lu(loaded);
    double rcond = lu.rcond();
    if (!(rcond > 1e-14))
    {
        std::ostringstream msg;
        msg << "coupling_matrix: loaded impedance matrix is numerically singular"
            << " (reciprocal condition estimate " << rcond << ")";
        throw numerical_error(msg.str());
    }

    cmat p = lu.solve(cmat::Identity(n, n));

    // Backward-error criterion: ||A P - I|| scales with ||A|| ||P|| for a
    // stable solve, so normalize before comparing against the tolerance.
    double residual = (loaded * p - cmat::Identity(n, n)).cwiseAbs().maxCoeff();
    double scale = 1.0 + loaded.cwiseAbs().maxCoeff() * p.cwiseAbs().maxCoeff() *
                             static_cast<double>(n);
    if (!(residual <= 1e-12 * scale))
    {
        std::ostringstream msg;
        msg << "coupling_matrix: inverse backward error " << residual / scale
            << " exceeds 1e-12";
        throw numerical_error(msg.str());
    }
    return p;
}

ChannelState channel_state(const ImpedanceSet &z_set, const ArrayGeometry &geometry,
                           const LinkConfig &link)
{
    ChannelState state;
    state.freq = z_set.freq;
    state.gamma = gamma_scalar(z_set.freq, link, z_set.z_self_tx, z_set.z_self_rx);
    state.coupling = coupling_matrix(z_set, link);
    state.steering = steering_vector(z_set.freq, link.aoa, geometry);
    state.channel = state.gamma * (state.coupling * state.steering);
    return state;
}

ChannelState channel_state(double f, const ArrayGeometry &geometry, const MutualImpedanceModel &model,
                           const LinkConfig &link, double resonance)
{
    return channel_state(array_impedance_matrix(geometry, model, f, resonance), geometry, link);
}

} // namespace squint
