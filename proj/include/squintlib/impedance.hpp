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

#ifndef SQUINTLIB_IMPEDANCE_HPP
#define SQUINTLIB_IMPEDANCE_HPP

#include <memory>
#include <string_view>

#include "squintlib/types.hpp"

namespace squint
{

// Self and mutual impedances of the receive array at one frequency, plus the
// transmit-side self impedance. z_matrix is N x N, complex-symmetric Toeplitz,
// with every diagonal entry equal to z_self_rx.
struct ImpedanceSet
{
    double freq = 0.0;   // Hz
    cdouble z_self_rx{}; // ohm
    cdouble z_self_tx{}; // ohm
    cmat z_matrix;       // ohm
};

// Strategy for the mutual impedance between two identical elements at a given
// center-to-center separation. Implementations must be symmetric in the pair
// (the separation is all that matters) and deterministic.
class MutualImpedanceModel
{
  public:
    virtual ~MutualImpedanceModel() = default;

    virtual cdouble evaluate(double f, double separation, const AntennaElement &element) const = 0;
    virtual std::string_view name() const noexcept = 0;
};

// Closed-form mutual impedance of canonical-minimum-scattering elements on a
// common axis, normalized to the 1-ohm radiation resistance used throughout:
//
//   u      = 2 pi f s / c
//   Z12(u) = 3R [ sin(u)/u^3 - cos(u)/u^2 ] + 3jR [ sin(u)/u^2 + cos(u)/u^3 ]
//
// The real part is R at u -> 0 and its envelope decays as 1/u^2; the kernel
// re(Z12)(u) = 3R j1(u)/u is a positive-definite function of the separation,
// which keeps re(Z_R) positive semidefinite for any linear array.
class CmsClosedFormModel final : public MutualImpedanceModel
{
  public:
    explicit CmsClosedFormModel(double resistance = 1.0) : resistance_(resistance) {}

    cdouble evaluate(double f, double separation, const AntennaElement &element) const override;
    std::string_view name() const noexcept override { return "cms-closed-form"; }

  private:
    double resistance_;
};

// Uncoupled limit: every mutual impedance is exactly zero.
class ZeroCouplingModel final : public MutualImpedanceModel
{
  public:
    cdouble evaluate(double f, double separation, const AntennaElement &element) const override;
    std::string_view name() const noexcept override { return "zero"; }
};

// Factory for the named model variants above ("cms-closed-form", "zero").
std::unique_ptr<MutualImpedanceModel> make_mutual_model(std::string_view name);

// Series-RLC self impedance of a Chu-limit element. R is fixed at 1 ohm,
// the circuit resonates at `resonance`, and the quality factor at resonance
// is the Chu bound Q = 1/(ka)^3 + 1/(ka) with k = 2 pi resonance / c and
// a the element radius. L = Q R / (2 pi resonance), C = 1 / ((2 pi resonance)^2 L).
cdouble chu_self_impedance(double f, const AntennaElement &element, double resonance);

// Mutual impedance between two elements of the given kind at separation s.
cdouble mutual_impedance(const MutualImpedanceModel &model, double f, double separation,
                         const AntennaElement &element);

// Assemble the full receive impedance matrix for a ULA plus the transmit self
// impedance. Only the N-1 distinct separations are evaluated; the matrix is
// filled by its Toeplitz structure. The transmit element radius is 100x the
// receive radius so the transmitter stays outside the Chu bandwidth limit.
ImpedanceSet array_impedance_matrix(const ArrayGeometry &geometry, const MutualImpedanceModel &model,
                                    double f, double resonance);

// Smallest eigenvalue of re(Z_R); negative values beyond tolerance indicate a
// non-passive model combination. Used by validation, not by the hot path.
double min_eigenvalue_re(const cmat &z_matrix);

} // namespace squint

#endif
