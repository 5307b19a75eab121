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
#include <string>

#include "squintlib/beamform.hpp"
#include "squintlib/errors.hpp"

namespace squint
{

std::string_view beamformer_name(BeamformerKind kind)
{
    switch (kind)
    {
    case BeamformerKind::conv:
        return "conv";
    case BeamformerKind::ttd_wc:
        return "ttd";
    case BeamformerKind::pop:
        return "pop";
    case BeamformerKind::td_generic:
        return "td";
    case BeamformerKind::td_i:
        return "td1";
    case BeamformerKind::td_ii:
        return "td2";
    case BeamformerKind::td_opt:
        return "tdopt";
    }
    throw domain_error("beamformer_name: unknown kind");
}

BeamformerKind beamformer_from_name(std::string_view name)
{
    if (name == "conv")
        return BeamformerKind::conv;
    if (name == "ttd")
        return BeamformerKind::ttd_wc;
    if (name == "pop")
        return BeamformerKind::pop;
    if (name == "td")
        return BeamformerKind::td_generic;
    if (name == "td1")
        return BeamformerKind::td_i;
    if (name == "td2")
        return BeamformerKind::td_ii;
    if (name == "tdopt")
        return BeamformerKind::td_opt;
    throw domain_error("unknown beamformer: " + std::string(name));
}

// Noise-whitened channel R_n^-1 h through a Hermitian factorization. The
// solution is residual-checked because a semidefinite R_n can slip through
// the factorization without a hard error.
static cvec whitened_channel(const ChannelState &state, const NoiseCovariance &rn)
{
    if (rn.matrix.rows() != state.channel.size())
        throw domain_error("noise covariance and channel dimensions disagree");

    Eigen::LDLT<cmat> ldlt(rn.matrix);
    if (ldlt.info() != Eigen::Success)
        throw numerical_error("noise covariance factorization failed");

    cvec y = ldlt.solve(state.channel);
    // Backward-error criterion: ||R y - h|| / (||R|| ||y|| + ||h||) is O(eps)
    // for a stable solve regardless of conditioning.
    double residual = (rn.matrix * y - state.channel).norm();
    double scale = rn.matrix.norm() * y.norm() + state.channel.norm();
    if (scale > 0.0 && !(residual <= 1e-10 * scale))
    {
        std::ostringstream msg;
        msg << "noise covariance solve backward error " << residual / scale
            << " exceeds 1e-10 (singular R_n?)";
        throw numerical_error(msg.str());
    }
    return y;
}

static cvec unit_phases(const cvec &v)
{
    cvec w(v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k)
        w(k) = std::polar(1.0, std::arg(v(k)));
    return w;
}

WeightVector conv_weights(double f_c, double aoa, const ArrayGeometry &geometry)
{
    return {f_c, steering_vector(f_c, aoa, geometry)};
}

WeightVector ttd_wc_weights(double f, double aoa, const ArrayGeometry &geometry)
{
    // The geometric delays reproduce the steering phases at every frequency.
    return {f, steering_vector(f, aoa, geometry)};
}

WeightVector pop_weights(double f_c, const ChannelState &state, const NoiseCovariance &rn)
{
    return {f_c, unit_phases(whitened_channel(state, rn))};
}

WeightVector td_generic_weights(const std::vector<double> &delays, double f)
{
    if (delays.empty())
        throw domain_error("td_generic_weights: delay vector is empty");

    cvec w(static_cast<Eigen::Index>(delays.size()));
    for (std::size_t k = 0; k < delays.size(); ++k)
        w(static_cast<Eigen::Index>(k)) = std::polar(1.0, 2.0 * pi * f * delays[k]);
    return {f, w};
}

std::vector<double> optimal_delays(double f, const ChannelState &state, const NoiseCovariance &rn)
{
    if (!(f > 0.0))
        throw domain_error("optimal_delays: frequency must be positive");

    cvec y = whitened_channel(state, rn);

    // Reference the phases to the first element with usable magnitude. The
    // global phase of R_n^-1 h is arbitrary (it absorbs the front-end phase
    // psi), and principal-value wrapping would otherwise let it leak into the
    // individual delays.
    cdouble ref{1.0, 0.0};
    for (Eigen::Index k = 0; k < y.size(); ++k)
    {
        if (std::abs(y(k)) > 0.0)
        {
            ref = y(k) / std::abs(y(k));
            break;
        }
    }

    std::vector<double> delays(static_cast<std::size_t>(y.size()));
    for (Eigen::Index k = 0; k < y.size(); ++k)
        delays[static_cast<std::size_t>(k)] = std::arg(y(k) * std::conj(ref)) / (2.0 * pi * f);
    return delays;
}

std::vector<double> td1_geometric_delays(double aoa, const ArrayGeometry &geometry)
{
    geometry.validate();

    double dt = geometry.spacing / speed_of_light * std::sin(aoa);
    std::vector<double> delays(static_cast<std::size_t>(geometry.n_elements));
    for (int k = 0; k < geometry.n_elements; ++k)
        delays[static_cast<std::size_t>(k)] = dt * k;
    return delays;
}

std::vector<double> td2_center_delays(double f_c, const ChannelState &state, const NoiseCovariance &rn)
{
    return optimal_delays(f_c, state, rn);
}

} // namespace squint
