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
#include "squintlib/parallel.hpp"
#include "squintlib/quadrature.hpp"

namespace squint
{

namespace
{

struct GlNode
{
    double x;
    double w;
};

// 16-point Gauss-Legendre rule on [-1, 1], exact for polynomials up to
// degree 31.
constexpr GlNode gl16[16] = {
    {-0.98940093499164994, 0.027152459411754037},
    {-0.9445750230732326, 0.062253523938647706},
    {-0.86563120238783176, 0.095158511682492591},
    {-0.755404408355003, 0.12462897125553403},
    {-0.61787624440264377, 0.14959598881657676},
    {-0.45801677765722737, 0.16915651939500262},
    {-0.28160355077925892, 0.18260341504492361},
    {-0.095012509837637454, 0.18945061045506859},
    {+0.095012509837637454, 0.18945061045506859},
    {+0.28160355077925892, 0.18260341504492361},
    {+0.45801677765722737, 0.16915651939500262},
    {+0.61787624440264377, 0.14959598881657676},
    {+0.755404408355003, 0.12462897125553403},
    {+0.86563120238783176, 0.095158511682492591},
    {+0.9445750230732326, 0.062253523938647706},
    {+0.98940093499164994, 0.027152459411754037},
};

// Integral estimate with `panels` equal panels. Panel sums land in
// index-ordered slots and are combined pairwise, so the reduction order
// is fixed no matter how many threads evaluated the panels.
std::vector<double> integrate_level(const std::function<void(double, double *)> &fn, int n_outputs,
                                    double lo, double hi, int panels, int threads)
{
    const double h = (hi - lo) / panels;
    std::vector<double> slots(static_cast<std::size_t>(panels) * n_outputs, 0.0);

    parallel_for(static_cast<std::size_t>(panels), threads, [&](std::size_t i) {
        double *acc = slots.data() + i * n_outputs;
        double row[64];
        double a = lo + h * static_cast<double>(i);
        for (const auto &node : gl16)
        {
            double f = a + 0.5 * h * (node.x + 1.0);
            fn(f, row);
            for (int j = 0; j < n_outputs; ++j)
                acc[j] += 0.5 * h * node.w * row[j];
        }
    });

    std::size_t m = static_cast<std::size_t>(panels);
    while (m > 1)
    {
        std::size_t half = m / 2;
        for (std::size_t i = 0; i < half; ++i)
            for (int j = 0; j < n_outputs; ++j)
                slots[i * n_outputs + j] =
                    slots[2 * i * n_outputs + j] + slots[(2 * i + 1) * n_outputs + j];
        if (m % 2 == 1)
            for (int j = 0; j < n_outputs; ++j)
                slots[half * n_outputs + j] = slots[(m - 1) * n_outputs + j];
        m = half + m % 2;
    }
    slots.resize(static_cast<std::size_t>(n_outputs));
    return slots;
}

} // namespace

int suggest_panels(double oscillations, int max_panels)
{
    double target = 2.0 * oscillations;
    int p = 8;
    while (p < target && p < max_panels)
        p *= 2;
    return p < max_panels ? p : max_panels;
}

std::vector<double> average_over_interval_multi(const std::function<void(double, double *)> &fn,
                                                int n_outputs, double lo, double hi,
                                                const QuadratureSpec &spec)
{
    if (!(hi > lo))
        throw domain_error("average_over_interval: interval must have positive width");
    if (n_outputs < 1 || n_outputs > 64)
        throw domain_error("average_over_interval: unsupported output count");

    int panels = spec.init_panels > 0 ? spec.init_panels : 8;
    if (panels > spec.max_panels)
        panels = spec.max_panels;

    std::vector<double> prev = integrate_level(fn, n_outputs, lo, hi, panels, spec.threads);

    while (2 * panels <= spec.max_panels)
    {
        panels *= 2;
        std::vector<double> next = integrate_level(fn, n_outputs, lo, hi, panels, spec.threads);

        bool converged = true;
        for (int j = 0; j < n_outputs; ++j)
        {
            double tol = spec.rtol * std::max(std::abs(next[j]), 1e-300);
            if (!(std::abs(next[j] - prev[j]) <= tol))
            {
                converged = false;
                break;
            }
        }
        prev = std::move(next);
        if (converged)
        {
            for (auto &v : prev)
                v /= (hi - lo);
            return prev;
        }
    }

    std::ostringstream msg;
    msg << "quadrature did not converge within " << spec.max_panels << " panels"
        << " (last estimate " << prev[0] / (hi - lo) << ")";
    throw numerical_error(msg.str());
}

double average_over_interval(const std::function<double(double)> &fn, double lo, double hi,
                             const QuadratureSpec &spec)
{
    auto wrapped = [&fn](double f, double *out) { out[0] = fn(f); };
    return average_over_interval_multi(wrapped, 1, lo, hi, spec)[0];
}

} // namespace squint
