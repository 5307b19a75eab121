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
#include <string>

#include "squintlib/errors.hpp"
#include "squintlib/impedance.hpp"

namespace squint
{

// Radiation resistance used to normalize all impedances; the reference setup
// works with 1-ohm source and LNA impedances.
static constexpr double radiation_resistance = 1.0;

// Ratio of the transmit element radius to the receive radius; large enough
// that the transmitter's Chu bandwidth never limits the link.
static constexpr double tx_radius_factor = 100.0;

cdouble chu_self_impedance(double f, const AntennaElement &element, double resonance)
{
    if (!(f > 0.0))
        throw domain_error("chu_self_impedance: frequency must be positive");
    if (!(resonance > 0.0))
        throw domain_error("chu_self_impedance: resonance frequency must be positive");
    element.validate();

    double ka = 2.0 * pi * resonance / speed_of_light * element.radius;
    double q = 1.0 / (ka * ka * ka) + 1.0 / ka;

    double w_res = 2.0 * pi * resonance;
    double ind = q * radiation_resistance / w_res;
    double cap = 1.0 / (w_res * w_res * ind);

    double w = 2.0 * pi * f;
    return {radiation_resistance, w * ind - 1.0 / (w * cap)};
}

cdouble CmsClosedFormModel::evaluate(double f, double separation, const AntennaElement &element) const
{
    (void)element; // the CMS kernel depends on the electrical separation only

    double u = 2.0 * pi * f / speed_of_light * separation;
    double re;
    if (u < 0.1)
    {
        // sin(u)/u^3 - cos(u)/u^2 cancels catastrophically for small u;
        // switch to its Taylor series 1/3 - u^2/30 + u^4/840 - u^6/45360.
        double u2 = u * u;
        re = 1.0 / 3.0 + u2 * (-1.0 / 30.0 + u2 * (1.0 / 840.0 - u2 / 45360.0));
    }
    else
    {
        re = std::sin(u) / (u * u * u) - std::cos(u) / (u * u);
    }
    double im = std::sin(u) / (u * u) + std::cos(u) / (u * u * u);
    return {3.0 * resistance_ * re, 3.0 * resistance_ * im};
}

cdouble ZeroCouplingModel::evaluate(double f, double separation, const AntennaElement &element) const
{
    (void)f;
    (void)separation;
    (void)element;
    return {0.0, 0.0};
}

std::unique_ptr<MutualImpedanceModel> make_mutual_model(std::string_view name)
{
    if (name == "cms-closed-form")
        return std::make_unique<CmsClosedFormModel>();
    if (name == "zero")
        return std::make_unique<ZeroCouplingModel>();
    throw domain_error("unknown mutual impedance model: " + std::string(name));
}

cdouble mutual_impedance(const MutualImpedanceModel &model, double f, double separation,
                         const AntennaElement &element)
{
    if (!(f > 0.0))
        throw domain_error("mutual_impedance: frequency must be positive");
    if (!(separation > 0.0))
        throw domain_error("mutual_impedance: separation must be positive");
    return model.evaluate(f, separation, element);
}

ImpedanceSet array_impedance_matrix(const ArrayGeometry &geometry, const MutualImpedanceModel &model,
                                    double f, double resonance)
{
    geometry.validate();
    const int n = geometry.n_elements;

    ImpedanceSet out;
    out.freq = f;
    out.z_self_rx = chu_self_impedance(f, geometry.element, resonance);

    AntennaElement tx = geometry.element;
    tx.radius *= tx_radius_factor;
    out.z_self_tx = chu_self_impedance(f, tx, resonance);

    // One mutual evaluation per distinct separation; the ULA makes the
    // matrix Toeplitz.
    cvec first_row(n);
    first_row(0) = out.z_self_rx;
    for (int m = 1; m < n; ++m)
        first_row(m) = mutual_impedance(model, f, m * geometry.spacing, geometry.element);

    out.z_matrix.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.z_matrix(i, j) = first_row(std::abs(i - j));

    return out;
}

double min_eigenvalue_re(const cmat &z_matrix)
{
    Eigen::MatrixXd re = z_matrix.real();
    // Symmetrize against rounding; re(Z) is symmetric by construction.
    Eigen::MatrixXd sym = 0.5 * (re + re.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numerical_error("min_eigenvalue_re: eigenvalue computation failed");
    return solver.eigenvalues()(0);
}

} // namespace squint
