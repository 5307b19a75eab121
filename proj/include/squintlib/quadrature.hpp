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

#ifndef SQUINTLIB_QUADRATURE_HPP
#define SQUINTLIB_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "squintlib/types.hpp"

namespace squint
{

// Composite Gauss-Legendre average over a band. Panels are refined
// dyadically until two successive estimates agree to rtol in every output
// component. init_panels = 0 lets the caller's oscillation hint (or the
// default of 8 panels) pick the starting resolution.
//
// Panel sums are accumulated pairwise in panel-index order, so the result is
// bit-identical regardless of how many threads evaluate the panels.
struct QuadratureSpec
{
    double rtol = 1e-9;
    int init_panels = 0;
    int max_panels = 16384;
    int threads = 1;
};

// Average of a scalar function over [lo, hi]. Throws numerical_error when the
// panel budget is exhausted before the tolerance is met (the message carries
// the last estimate and the remaining gap).
double average_over_interval(const std::function<double(double)> &fn, double lo, double hi,
                             const QuadratureSpec &spec);

// Vector-valued variant; fn fills a row of n_outputs values per frequency.
// Convergence requires every component to settle. Used to integrate several
// beamformers in one pass when the integrand shares expensive per-frequency
// state.
std::vector<double> average_over_interval_multi(const std::function<void(double, double *)> &fn,
                                                int n_outputs, double lo, double hi,
                                                const QuadratureSpec &spec);

// Suggested initial panel count for an array-factor-like integrand that
// oscillates osc times over the interval: the next power of two above
// max(8, 2 * osc), clamped to max_panels.
int suggest_panels(double oscillations, int max_panels);

} // namespace squint

#endif
