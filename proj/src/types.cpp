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
#include "squintlib/types.hpp"

namespace squint
{

void AntennaElement::validate() const
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw domain_error("antenna element radius must be positive");
    if (!(gain > 0.0) || !std::isfinite(gain))
        throw domain_error("antenna element gain must be positive");
}

void ArrayGeometry::validate() const
{
    if (n_elements < 1)
        throw domain_error("array must have at least one element");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw domain_error("element spacing must be positive");
    element.validate();
}

void LinkConfig::validate() const
{
    if (!(distance > 0.0))
        throw domain_error("link distance must be positive");
    if (!(path_loss_exponent > 0.0))
        throw domain_error("path loss exponent must be positive");
    if (!(tx_gain > 0.0) || !(rx_gain > 0.0))
        throw domain_error("antenna gains must be positive");
    if (!(aoa >= -pi / 2.0) || !(aoa <= pi / 2.0))
        throw domain_error("angle of arrival must lie in [-pi/2, pi/2]");
    if (!(lna_impedance.real() > 0.0))
        throw domain_error("LNA impedance must have positive real part");
    if (!(lna_gain >= 0.0))
        throw domain_error("LNA gain must be nonnegative");
    if (!std::isfinite(psi))
        throw domain_error("front-end phase must be finite");
}

void NoiseConfig::validate() const
{
    if (!(boltzmann > 0.0))
        throw domain_error("Boltzmann constant must be positive");
    if (!(temperature > 0.0))
        throw domain_error("temperature must be positive");
    if (!(noise_bandwidth > 0.0))
        throw domain_error("per-tone noise bandwidth must be positive");
    if (!(noise_factor >= 1.0))
        throw domain_error("noise factor must be at least 1 (linear)");
}

double noise_factor_from_db(double nf_db)
{
    return std::pow(10.0, nf_db / 10.0);
}

void BandSpec::validate() const
{
    if (!(width >= 0.0))
        throw domain_error("band width must be nonnegative");
    if (!(center - width / 2.0 > 0.0))
        throw domain_error("band must lie inside positive frequencies");
    if (!(power_per_tone > 0.0))
        throw domain_error("per-tone power must be positive");
}

} // namespace squint
