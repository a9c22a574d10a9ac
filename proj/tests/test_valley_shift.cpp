/* Copyright 2026 The strainvalley Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gen.hpp"
#include "oracles.hpp"
#include "strainvalley/errors.hpp"
#include "strainvalley/valley_shift.hpp"

#include <doctest.h>

#include <cmath>

using namespace strainvalley;

namespace {

const MaterialParams kDefault = default_params();

}  // namespace

TEST_CASE("bulk energies at 1 % strain") {
    const auto l1 = bulk_energy(ValleyKind::L1, kDefault, 0.01);
    CHECK(l1.de1 == doctest::Approx(-0.1645).epsilon(1e-3));
    CHECK(l1.de2 == doctest::Approx(-0.00225).epsilon(1e-9));
    CHECK(l1.total == doctest::Approx(1.9332).epsilon(5e-4));
    CHECK(l1.eq == 0.0);

    const auto l3 = bulk_energy(ValleyKind::L3, kDefault, 0.01);
    CHECK(l3.de1 == doctest::Approx(0.0419).epsilon(3e-3));
    CHECK(l3.total == doctest::Approx(2.1404).epsilon(5e-4));

    const auto d6 = bulk_energy(ValleyKind::Delta6, kDefault, 0.01);
    CHECK(d6.de1 == doctest::Approx(0.0648).epsilon(1e-3));
    CHECK(d6.total == doctest::Approx(1.2338).epsilon(5e-4));
}

TEST_CASE("composite linear coefficients") {
    // Frozen from an independent evaluation of the default set.
    const auto s = strain_state(kDefault.elastic, 1.0);
    CHECK(linear_shift(ValleyKind::L1, kDefault.deformation, s) == doctest::Approx(-16.451).epsilon(1e-4));
    CHECK(linear_shift(ValleyKind::L3, kDefault.deformation, s) == doctest::Approx(4.193).epsilon(1e-3));
    CHECK(linear_shift(ValleyKind::Delta6, kDefault.deformation, s) == doctest::Approx(6.4835).epsilon(1e-4));
}

TEST_CASE("printed polynomials reproduce the bulk energies") {
    for (double eps = 0.0; eps <= 0.05; eps += 0.005) {
        CHECK(std::abs(bulk_energy(ValleyKind::L1, kDefault, eps).total - oracle::default_l1_polynomial(eps)) < 5e-4);
        CHECK(std::abs(bulk_energy(ValleyKind::L3, kDefault, eps).total - oracle::default_l3_polynomial(eps)) < 5e-4);
        CHECK(std::abs(bulk_energy(ValleyKind::Delta6, kDefault, eps).total - oracle::default_d6_polynomial(eps)) < 5e-4);
    }
}

TEST_CASE("property: linear shifts match the dyadic contraction over the valley star") {
    gen::Rng rng(21);
    const Eigen::Vector3d l1_axis(1, 1, 1);
    const Eigen::Vector3d l3_axes[3] = {{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
    const Eigen::Vector3d d_axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int i = 0; i < 500; ++i) {
        const auto c = rng.cubic();
        DeformationPotentials dp;
        dp.xi_u_delta = rng.uniform(1.0, 20.0);
        dp.xi_d_delta = rng.uniform(-10.0, 10.0);
        dp.xi_u_L = rng.uniform(1.0, 20.0);
        dp.xi_d_L = rng.uniform(-10.0, 10.0);
        const auto s = strain_state(c, rng.uniform(-0.05, 0.05));

        const double l1 = linear_shift(ValleyKind::L1, dp, s);
        CHECK(std::abs(l1 - oracle::dyadic_shift(dp.xi_d_L, dp.xi_u_L, l1_axis, s.tensor_crystal)) < 1e-12);
        const double l3 = linear_shift(ValleyKind::L3, dp, s);
        for (const auto& a : l3_axes)
            CHECK(std::abs(l3 - oracle::dyadic_shift(dp.xi_d_L, dp.xi_u_L, a, s.tensor_crystal)) < 1e-12);
        const double d6 = linear_shift(ValleyKind::Delta6, dp, s);
        for (const auto& a : d_axes)
            CHECK(std::abs(d6 - oracle::dyadic_shift(dp.xi_d_delta, dp.xi_u_delta, a, s.tensor_crystal)) < 1e-12);
    }
}

TEST_CASE("property: linear shift is odd and additive in strain") {
    gen::Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        const double a = rng.uniform(0.0, 0.05), b = rng.uniform(0.0, 0.05);
        for (ValleyKind v : all_valleys) {
            const auto& dp = kDefault.deformation;
            const auto& c = kDefault.elastic;
            const double fa = linear_shift(v, dp, strain_state(c, a));
            const double fb = linear_shift(v, dp, strain_state(c, b));
            const double fab = linear_shift(v, dp, strain_state(c, a + b));
            CHECK(std::abs(fab - fa - fb) < 1e-12);
            CHECK(std::abs(linear_shift(v, dp, strain_state(c, -a)) + fa) < 1e-15);
        }
    }
}

TEST_CASE("quadratic shift is d eps^2") {
    for (ValleyKind v : all_valleys) {
        CHECK(quadratic_shift(v, kDefault.quadratic, 0.02) == doctest::Approx(kDefault.quadratic(v) * 4e-4).epsilon(1e-14));
        CHECK(quadratic_shift(v, kDefault.quadratic, -0.02) == quadratic_shift(v, kDefault.quadratic, 0.02));
    }
}

TEST_CASE("unstrained L valleys are degenerate") {
    const auto l1 = bulk_energy(ValleyKind::L1, kDefault, 0.0);
    const auto l3 = bulk_energy(ValleyKind::L3, kDefault, 0.0);
    const auto d6 = bulk_energy(ValleyKind::Delta6, kDefault, 0.0);
    CHECK(l1.total == 2.10);
    CHECK(l3.total == 2.10);
    CHECK(d6.total == 1.17);
}

TEST_CASE("property: tensile strain puts L1 below L3") {
    gen::Rng rng(23);
    for (int i = 0; i < 1000; ++i) {
        const double eps = rng.uniform(1e-6, 0.06);
        CHECK(bulk_energy(ValleyKind::L1, kDefault, eps).total < bulk_energy(ValleyKind::L3, kDefault, eps).total);
    }
}

TEST_CASE("property: total is the sum of its parts") {
    gen::Rng rng(24);
    for (int i = 0; i < 300; ++i) {
        const double eps = rng.uniform(-0.1, 0.1);
        for (ValleyKind v : all_valleys) {
            const auto e = bulk_energy(v, kDefault, eps);
            CHECK(e.valley == v);
            CHECK(e.total == doctest::Approx(e.e0 + e.de1 + e.de2 + e.eq).epsilon(1e-15));
        }
    }
}

TEST_CASE("strain beyond the supported range is rejected") {
    CHECK_THROWS_AS(bulk_energy(ValleyKind::L1, kDefault, 0.11), DomainError);
    CHECK_THROWS_AS(bulk_energy(ValleyKind::Delta6, kDefault, -0.2), DomainError);
    CHECK_NOTHROW(bulk_energy(ValleyKind::L1, kDefault, 0.10));
    CHECK_THROWS_AS(bulk_energy(ValleyKind::L1, kDefault, std::nan("")), DomainError);
}
