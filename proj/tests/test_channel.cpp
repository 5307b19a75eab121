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

#include "squintlib/channel.hpp"
#include "squintlib/errors.hpp"
#include "squintlib/impedance.hpp"

using namespace squint;

namespace
{

ArrayGeometry tight_geometry()
{
    return {32, 0.005, AntennaElement{0.005 / 2.6, 1.0}};
}

LinkConfig reference_link(double aoa)
{
    LinkConfig link;
    link.aoa = aoa;
    return link;
}

bool close(cdouble a, cdouble b, double rtol)
{
    return std::abs(a - b) <= rtol * std::abs(b);
}

} // namespace

TEST_CASE("steering_vector - unit modulus and conjugate progression")
{
    ArrayGeometry geo = tight_geometry();
    double f = 9.3e9, aoa = 0.7;
    cvec a = steering_vector(f, aoa, geo);

    REQUIRE(a.size() == 32);
    CHECK(a(0) == cdouble{1.0, 0.0});
    for (int k = 0; k < 32; ++k)
        CHECK(std::abs(std::abs(a(k)) - 1.0) < 1e-14);

    // Constant phase increment 2 pi f (spacing/c) sin(aoa) between neighbors.
    cdouble step = std::polar(1.0, 2.0 * pi * f * geo.spacing / speed_of_light * std::sin(aoa));
    for (int k = 1; k < 32; ++k)
        CHECK(std::abs(a(k) - a(k - 1) * step) < 1e-13);
}

TEST_CASE("steering_vector - broadside is all ones, endfire wraps fastest")
{
    ArrayGeometry geo = tight_geometry();
    cvec broadside = steering_vector(10e9, 0.0, geo);
    for (int k = 0; k < 32; ++k)
        CHECK(broadside(k) == cdouble{1.0, 0.0});

    // Negative angles conjugate the progression.
    cvec plus = steering_vector(10e9, 0.5, geo);
    cvec minus = steering_vector(10e9, -0.5, geo);
    for (int k = 0; k < 32; ++k)
        CHECK(std::abs(plus(k) - std::conj(minus(k))) < 1e-14);
}

TEST_CASE("steering_vector - single element")
{
    ArrayGeometry geo{1, 0.005, AntennaElement{0.001, 1.0}};
    cvec a = steering_vector(10e9, 1.0, geo);
    REQUIRE(a.size() == 1);
    CHECK(a(0) == cdouble{1.0, 0.0});
}

TEST_CASE("path_gain - reference value and monotonicity")
{
    LinkConfig link = reference_link(0.0);
    CHECK(path_gain(10e9, link) == Catch::Approx(7.4065405384012977e-12).epsilon(1e-14));
    CHECK(path_gain(5e9, link) > path_gain(10e9, link));

    LinkConfig nearer = link;
    nearer.distance = 45.0;
    CHECK(path_gain(10e9, nearer) > path_gain(10e9, link));
    CHECK_THROWS_AS(path_gain(0.0, link), domain_error);
}

TEST_CASE("gamma_scalar - reference values")
{
    LinkConfig link = reference_link(pi / 3);
    AntennaElement el{0.005 / 2.6, 1.0};
    AntennaElement tx{100.0 * el.radius, 1.0};

    // At resonance both reactances vanish: gamma = rho sqrt(beta) / 2 > 0.
    cdouble gc = gamma_scalar(10e9, link, chu_self_impedance(10e9, tx, 10e9),
                              chu_self_impedance(10e9, el, 10e9));
    CHECK(close(gc, {1.3607480055470683e-05, 0.0}, 1e-12));

    cdouble g4 = gamma_scalar(4e9, link, chu_self_impedance(4e9, tx, 10e9),
                              chu_self_impedance(4e9, el, 10e9));
    CHECK(close(g4, {3.3995599489489275e-05, 8.8618306106774448e-07}, 1e-12));
}

TEST_CASE("gamma_scalar - psi rotates the phase, not the magnitude")
{
    LinkConfig link = reference_link(0.3);
    cdouble z_tx{1.0, -0.05}, z_rx{1.0, 2.0};
    cdouble base = gamma_scalar(8e9, link, z_tx, z_rx);

    LinkConfig rotated = link;
    rotated.psi = 1.234;
    cdouble rot = gamma_scalar(8e9, rotated, z_tx, z_rx);
    CHECK(std::abs(std::abs(rot) - std::abs(base)) < 1e-15 * std::abs(base));
    CHECK(std::abs(rot - base * std::polar(1.0, 1.234)) < 1e-14 * std::abs(base));
}

TEST_CASE("coupling_matrix - zero coupling inverts the scalar load")
{
    ArrayGeometry geo = tight_geometry();
    LinkConfig link = reference_link(0.0);
    auto model = make_mutual_model("zero");
    ImpedanceSet z = array_impedance_matrix(geo, *model, 8e9, 10e9);

    cmat p = coupling_matrix(z, link);
    cdouble expect = 1.0 / (z.z_self_rx + link.lna_impedance);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j)
            CHECK(std::abs(p(i, j) - (i == j ? expect : cdouble{0.0, 0.0})) < 1e-15);
}

TEST_CASE("coupling_matrix - reference values under tight coupling")
{
    ArrayGeometry geo = tight_geometry();
    LinkConfig link = reference_link(pi / 3);
    auto model = make_mutual_model("cms-closed-form");
    ImpedanceSet z = array_impedance_matrix(geo, *model, 4e9, 10e9);

    cmat p = coupling_matrix(z, link);
    CHECK(close(p(0, 0), {0.0067630130092014296, 0.016098200376507926}, 1e-12));
    CHECK(close(p(0, 1), {0.0059116733753201978, -0.0055232381363716923}, 1e-12));

    // (Z_R + Z_LNA I) P = I to machine backward error.
    cmat loaded = z.z_matrix;
    loaded.diagonal().array() += link.lna_impedance;
    double residual = (loaded * p - cmat::Identity(32, 32)).cwiseAbs().maxCoeff();
    CHECK(residual < 1e-12);
}

TEST_CASE("channel_state - composition h = gamma P a")
{
    ArrayGeometry geo = tight_geometry();
    LinkConfig link = reference_link(pi / 3);
    auto model = make_mutual_model("cms-closed-form");

    ChannelState st = channel_state(7e9, geo, *model, link, 10e9);
    REQUIRE(st.channel.size() == 32);
    CHECK(st.freq == 7e9);

    cvec manual = st.gamma * (st.coupling * st.steering);
    for (int k = 0; k < 32; ++k)
        CHECK(std::abs(st.channel(k) - manual(k)) < 1e-18);
    CHECK(&st.distorted_steering() == &st.channel);
}

TEST_CASE("channel_state - impedance-set overload matches the from-scratch build")
{
    ArrayGeometry geo = tight_geometry();
    LinkConfig link = reference_link(0.9);
    auto model = make_mutual_model("cms-closed-form");

    ImpedanceSet z = array_impedance_matrix(geo, *model, 11e9, 10e9);
    ChannelState a = channel_state(11e9, geo, *model, link, 10e9);
    ChannelState b = channel_state(z, geo, link);
    for (int k = 0; k < 32; ++k)
        CHECK(a.channel(k) == b.channel(k));
}

TEST_CASE("channel_state - psi only rotates the channel globally")
{
    ArrayGeometry geo = tight_geometry();
    auto model = make_mutual_model("cms-closed-form");
    LinkConfig link = reference_link(pi / 3);
    ChannelState base = channel_state(9e9, geo, *model, link, 10e9);

    LinkConfig rot_link = link;
    rot_link.psi = 2.1;
    ChannelState rot = channel_state(9e9, geo, *model, rot_link, 10e9);

    cdouble phase = std::polar(1.0, 2.1);
    for (int k = 0; k < 32; ++k)
        CHECK(std::abs(rot.channel(k) - base.channel(k) * phase) < 1e-15 * std::abs(base.channel(k)));
}
