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

#ifndef SQUINTLIB_NOISE_HPP
#define SQUINTLIB_NOISE_HPP

#include <utility>

#include "squintlib/channel.hpp"
#include "squintlib/impedance.hpp"
#include "squintlib/types.hpp"

namespace squint
{

// Receiver noise covariance at one frequency, Hermitian positive semidefinite.
struct NoiseCovariance
{
    double freq = 0.0;
    cmat matrix;
};

// R_n(f) = 4 k_b T df [ re(Z_LNA)(N_f - 1) I + rho^2 |Z_LNA|^2 P re(Z_R) P^H ].
// The first term is the LNA's own noise, the second the antenna thermal noise
// amplified through the coupled front end. The result is symmetrized,
// (M + M^H)/2, after checking that the raw asymmetry is below 1e-10 relative.
//
// When check_psd is set, the smallest eigenvalue is verified against
// -1e-9 * trace/N and a numerical_error is thrown on violation. The check
// costs an eigendecomposition, so dense sweeps leave it off and rely on the
// validation suite, which verifies re(Z_R) >= 0 across the band (PSD of R_n
// follows by congruence).
NoiseCovariance noise_covariance(const ImpedanceSet &z_set, const cmat &coupling,
                                 const LinkConfig &link, const NoiseConfig &cfg,
                                 bool check_psd = false);

// Convenience overload that builds P(f) itself.
NoiseCovariance noise_covariance(const ImpedanceSet &z_set, const LinkConfig &link,
                                 const NoiseConfig &cfg, bool check_psd = false);

// Scalars of the uncoupled limit where P = sigma_c^2 I and R_n = sigma_n^2 I:
// sigma_c^2 = 1/(Z_R + Z_LNA), sigma_n^2 = the matching diagonal noise entry.
std::pair<cdouble, double> weakly_coupled_scalars(const ImpedanceSet &z_set, const LinkConfig &link,
                                                  const NoiseConfig &cfg);

} // namespace squint

#endif
