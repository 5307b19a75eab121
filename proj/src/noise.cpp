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

#include "squintlib/errors.hpp"
#include "squintlib/noise.hpp"

namespace squint
{

NoiseCovariance noise_covariance(const ImpedanceSet &z_set, const cmat &coupling,
                                 const LinkConfig &link, const NoiseConfig &cfg, bool check_psd)
{
    cfg.validate();
    const auto n = z_set.z_matrix.rows();

    double thermal = 4.0 * cfg.boltzmann * cfg.temperature * cfg.noise_bandwidth;
    double lna_term = link.lna_impedance.real() * (cfg.noise_factor - 1.0);
    double amp = link.lna_gain * link.lna_gain * std::norm(link.lna_impedance);

    cmat re_z = z_set.z_matrix.real().cast<cdouble>();
    cmat raw = thermal * (amp * (coupling * re_z * coupling.adjoint()));
    raw.diagonal().array() += thermal * lna_term;

    double scale = raw.cwiseAbs().maxCoeff();
    double asym = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    if (scale > 0.0 && !(asym <= 1e-10 * scale))
    {
        std::ostringstream msg;
        msg << "noise_covariance: relative asymmetry " << asym / scale << " exceeds 1e-10";
        throw numerical_error(msg.str());
    }

    NoiseCovariance out;
    out.freq = z_set.freq;
    out.matrix = 0.5 * (raw + raw.adjoint().eval());

    if (check_psd)
    {
        Eigen::SelfAdjointEigenSolver<cmat> solver(out.matrix, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw numerical_error("noise_covariance: eigenvalue check failed to converge");
        double floor = -1e-9 * out.matrix.real().trace() / static_cast<double>(n);
        if (solver.eigenvalues()(0) < floor)
        {
            std::ostringstream msg;
            msg << "noise_covariance: covariance lost positive semidefiniteness"
                << " (smallest eigenvalue " << solver.eigenvalues()(0) << ")";
            throw numerical_error(msg.str());
        }
    }
    return out;
}

NoiseCovariance noise_covariance(const ImpedanceSet &z_set, const LinkConfig &link,
                                 const NoiseConfig &cfg, bool check_psd)
{
    return noise_covariance(z_set, coupling_matrix(z_set, link), link, cfg, check_psd);
}

std::pair<cdouble, double> weakly_coupled_scalars(const ImpedanceSet &z_set, const LinkConfig &link,
                                                  const NoiseConfig &cfg)
{
    cfg.validate();

    cdouble sigma_c2 = 1.0 / (z_set.z_self_rx + link.lna_impedance);

    double thermal = 4.0 * cfg.boltzmann * cfg.temperature * cfg.noise_bandwidth;
    double amp = link.lna_gain * link.lna_gain * std::norm(link.lna_impedance);
    double sigma_n2 = thermal * (link.lna_impedance.real() * (cfg.noise_factor - 1.0) +
                                 amp * z_set.z_self_rx.real() * std::norm(sigma_c2));
    return {sigma_c2, sigma_n2};
}

} // namespace squint
