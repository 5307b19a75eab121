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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "squintlib/errors.hpp"
#include "squintlib/impedance.hpp"

using namespace squint;

namespace
{

// Reference geometry: 32 elements, 5 mm pitch, spacing/radius = 2.6.
ArrayGeometry tight_geometry()
{
    return {32, 0.005, AntennaElement{0.005 / 2.6, 1.0}};
}

bool close(cdouble a, cdouble b, double rtol)
{
    return std::abs(a - b) <= rtol * std::abs(b);
}

} // namespace

TEST_CASE("chu_self_impedance - purely resistive at resonance")
{
    AntennaElement el{0.005 / 2.6, 1.0};
    cdouble z = chu_self_impedance(10e9, el, 10e9);
    CHECK(z.real() == 1.0);
    CHECK(std::abs(z.imag()) < 1e-12);
}

TEST_CASE("chu_self_impedance - reference values off resonance")
{
    AntennaElement el{0.005 / 2.6, 1.0};
    CHECK(close(chu_self_impedance(8e9, el, 10e9), {1.0, -7.9894742648253452}, 1e-14));
    CHECK(close(chu_self_impedance(12e9, el, 10e9), {1.0, 6.5099419935613927}, 1e-14));
}

TEST_CASE("chu_self_impedance - capacitive below and inductive above resonance")
{
    AntennaElement el{0.001, 1.0};
    CHECK(chu_self_impedance(5e9, el, 10e9).imag() < 0.0);
    CHECK(chu_self_impedance(15e9, el, 10e9).imag() > 0.0);
    // Larger radius -> lower Q -> smaller reactance magnitude at fixed offset.
    AntennaElement big{0.002, 1.0};
    CHECK(std::abs(chu_self_impedance(8e9, big, 10e9).imag()) <
          std::abs(chu_self_impedance(8e9, el, 10e9).imag()));
}

TEST_CASE("chu_self_impedance - rejects bad inputs")
{
    AntennaElement el{0.001, 1.0};
    CHECK_THROWS_AS(chu_self_impedance(0.0, el, 10e9), domain_error);
    CHECK_THROWS_AS(chu_self_impedance(10e9, el, 0.0), domain_error);
    CHECK_THROWS_AS(chu_self_impedance(10e9, AntennaElement{0.0, 1.0}, 10e9), domain_error);
}

TEST_CASE("cms mutual impedance - reference values")
{
    CmsClosedFormModel model;
    AntennaElement el{0.005 / 2.6, 1.0};
    CHECK(close(model.evaluate(10e9, 0.005, el),
                {0.89440618028681662, 3.6687152311244087}, 1e-14));
    CHECK(close(model.evaluate(10e9, 0.010, el),
                {0.62431800091200595, 0.42763160808472278}, 1e-14));
    CHECK(close(model.evaluate(6e9, 0.005, el),
                {0.96102100114076983, 14.224259543880986}, 1e-14));
    CHECK(close(model.evaluate(4e9, 0.005, el),
                {0.98253963162946256, 44.156539769991554}, 1e-14));
}

TEST_CASE("cms mutual impedance - small-argument series matches direct formula")
{
    CmsClosedFormModel model;
    AntennaElement el{0.001, 1.0};
    // Just below the series switch point u = 0.1 the direct formula still has
    // ~12 good digits; the library value (series branch) must agree.
    double f = 1e9;
    double s = 0.099 * speed_of_light / (2.0 * pi * f);
    double u = 2.0 * pi * f / speed_of_light * s;
    cdouble direct{3.0 * (std::sin(u) / (u * u * u) - std::cos(u) / (u * u)),
                   3.0 * (std::sin(u) / (u * u) + std::cos(u) / (u * u * u))};
    CHECK(std::abs(model.evaluate(f, s, el) - direct) < 1e-11 * std::abs(direct));

    // The real part approaches the radiation resistance as s -> 0.
    cdouble tiny = model.evaluate(1e9, 1e-7, el);
    CHECK(std::abs(tiny.real() - 1.0) < 1e-9);
    CHECK(tiny.imag() > 1e6); // reactive singularity ~ 3R/u^3
}

TEST_CASE("cms mutual impedance - envelope decays with separation")
{
    CmsClosedFormModel model;
    AntennaElement el{0.001, 1.0};
    double f = 10e9;
    CHECK(std::abs(model.evaluate(f, 0.005, el)) > std::abs(model.evaluate(f, 0.05, el)));
    CHECK(std::abs(model.evaluate(f, 0.05, el)) > std::abs(model.evaluate(f, 0.5, el)));
}

TEST_CASE("mutual_impedance - rejects non-positive inputs")
{
    CmsClosedFormModel model;
    AntennaElement el{0.001, 1.0};
    CHECK_THROWS_AS(mutual_impedance(model, 10e9, 0.0, el), domain_error);
    CHECK_THROWS_AS(mutual_impedance(model, -1e9, 0.005, el), domain_error);
}

TEST_CASE("zero coupling model - identically zero")
{
    ZeroCouplingModel model;
    AntennaElement el{0.001, 1.0};
    CHECK(model.evaluate(10e9, 0.005, el) == cdouble{0.0, 0.0});
    CHECK(model.evaluate(3e9, 1.0, el) == cdouble{0.0, 0.0});
}

TEST_CASE("make_mutual_model - name round trip and unknown name")
{
    CHECK(make_mutual_model("cms-closed-form")->name() == "cms-closed-form");
    CHECK(make_mutual_model("zero")->name() == "zero");
    CHECK_THROWS_AS(make_mutual_model("dipole-exact"), domain_error);
}

TEST_CASE("array_impedance_matrix - structure of the assembled matrix")
{
    ArrayGeometry geo = tight_geometry();
    auto model = make_mutual_model("cms-closed-form");
    ImpedanceSet z = array_impedance_matrix(geo, *model, 10e9, 10e9);

    REQUIRE(z.z_matrix.rows() == 32);
    REQUIRE(z.z_matrix.cols() == 32);
    CHECK(z.freq == 10e9);

    // Complex symmetric (reciprocity), exactly Toeplitz, constant diagonal.
    for (int i = 0; i < 32; ++i)
    {
        CHECK(z.z_matrix(i, i) == z.z_self_rx);
        for (int j = 0; j < i; ++j)
        {
            CHECK(z.z_matrix(i, j) == z.z_matrix(j, i));
            CHECK(z.z_matrix(i, j) == z.z_matrix(i - j, 0));
        }
    }

    // Off-diagonals carry the pairwise mutual impedance of the separation.
    CHECK(z.z_matrix(0, 1) == model->evaluate(10e9, 0.005, geo.element));
    CHECK(z.z_matrix(3, 10) == model->evaluate(10e9, 7 * 0.005, geo.element));

    // The transmit element is 100x larger, same series-RLC rule.
    AntennaElement tx{100.0 * geo.element.radius, geo.element.gain};
    CHECK(z.z_self_tx == chu_self_impedance(10e9, tx, 10e9));
}

TEST_CASE("array_impedance_matrix - zero model reduces to a diagonal matrix")
{
    ArrayGeometry geo = tight_geometry();
    auto model = make_mutual_model("zero");
    ImpedanceSet z = array_impedance_matrix(geo, *model, 8e9, 10e9);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            if (i != j)
                CHECK(z.z_matrix(i, j) == cdouble{0.0, 0.0});
    CHECK(z.z_matrix(0, 0) == chu_self_impedance(8e9, geo.element, 10e9));
}

TEST_CASE("array_impedance_matrix - re(Z_R) stays positive semidefinite")
{
    ArrayGeometry geo = tight_geometry();
    auto model = make_mutual_model("cms-closed-form");
    for (double f : {4e9, 7e9, 10e9, 13e9, 16e9})
    {
        ImpedanceSet z = array_impedance_matrix(geo, *model, f, 10e9);
        CHECK(min_eigenvalue_re(z.z_matrix) > -1e-9);
    }
}

TEST_CASE("array_impedance_matrix - single element")
{
    ArrayGeometry geo{1, 0.005, AntennaElement{0.001, 1.0}};
    auto model = make_mutual_model("cms-closed-form");
    ImpedanceSet z = array_impedance_matrix(geo, *model, 10e9, 10e9);
    REQUIRE(z.z_matrix.rows() == 1);
    CHECK(z.z_matrix(0, 0) == z.z_self_rx);
}
