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

#include "strainvalley/errors.hpp"
#include "strainvalley/material_db.hpp"

#include <doctest.h>

#include <cstring>

using namespace strainvalley;

TEST_CASE("default parameter set") {
    const MaterialParams p = default_params();
    CHECK(p.deformation.xi_u_L == 16.14);
    CHECK(p.deformation.xi_d_L == -6.00);
    CHECK(p.deformation.xi_u_delta == 9.16);
    CHECK(p.deformation.xi_d_delta == 1.10);
    CHECK(p.masses(ValleyKind::L3).m_in == 0.13);
    CHECK(p.masses(ValleyKind::L1).m_in == 1.70);
    CHECK(p.masses(ValleyKind::Delta6).m_in == 0.26);
    CHECK(p.masses(ValleyKind::Delta6).m_out == 1.59);
    CHECK(p.lattice.a_si == 5.4307);
    CHECK(p.lattice.a_ge == 5.6575);
    CHECK(p.lattice.bowing_b == -0.0273);
    CHECK(p.elastic.c11 == 165.7);
    CHECK(p.elastic.c12 == 63.9);
    CHECK(p.elastic.c44 == 79.6);
    CHECK(p.quadratic(ValleyKind::L1) == -22.5);
    CHECK(p.quadratic(ValleyKind::L3) == -15.0);
    CHECK(p.quadratic(ValleyKind::Delta6) == -10.0);
    CHECK(p.band.e0_L == 2.10);
    CHECK(p.band.e0_delta == 1.17);
    CHECK(p.band.v0_offset_111 == 0.28);
    CHECK(p.constants.burgers_si == 0.384);
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("hbar^2/2m0 matches CODATA within 0.1 %") {
    // hbar^2 / (2 m0 e) in eV m^2, scaled to nm^2.
    const double hbar = 1.054571817e-34, m0 = 9.1093837015e-31, e = 1.602176634e-19;
    const double expected = hbar * hbar / (2.0 * m0 * e) * 1e18;
    CHECK(kHbar2Over2M0 == doctest::Approx(expected).epsilon(1e-9));
    CHECK(std::abs(kHbar2Over2M0 / 0.0381 - 1.0) < 1e-3);
}

TEST_CASE("default set is bit-stable") {
    const MaterialParams a = default_params();
    const MaterialParams b = default_params();
    CHECK(std::memcmp(&a.elastic, &b.elastic, sizeof a.elastic) == 0);
    CHECK(std::memcmp(&a.quadratic, &b.quadratic, sizeof a.quadratic) == 0);
    CHECK(std::memcmp(&a.masses.by_valley, &b.masses.by_valley, sizeof a.masses.by_valley) == 0);
    CHECK(std::memcmp(&a.lattice, &b.lattice, sizeof a.lattice) == 0);
    CHECK(std::memcmp(&a.band, &b.band, sizeof a.band) == 0);
    CHECK(std::memcmp(&a.constants, &b.constants, sizeof a.constants) == 0);
}

TEST_CASE("literature deformation-potential sets") {
    const auto f = table1_set("fischetti1996");
    CHECK(f.xi_u_delta == 10.5);
    CHECK(f.xi_d_delta == 1.1);
    CHECK(f.xi_u_L == 18.0);
    CHECK(f.xi_d_L == -7.0);

    const auto v = table1_set("vandewalle1986");
    const auto d = default_params().deformation;
    CHECK(v.xi_u_delta == d.xi_u_delta);
    CHECK(v.xi_d_delta == d.xi_d_delta);
    CHECK(v.xi_u_L == d.xi_u_L);
    CHECK(v.xi_d_L == d.xi_d_L);
    CHECK(v.source_label == d.source_label);

    const auto fr = table1_set("friedel1989");
    CHECK(fr.xi_u_L == 12.35);
    const auto r = table1_set("rideau2006");
    CHECK(r.xi_d_L == -6.06);
    CHECK(table1_labels().size() == 4);
}

TEST_CASE("unknown set lists the valid labels") {
    try {
        table1_set("nosuchpaper");
        FAIL("expected LookupError");
    } catch (const LookupError& e) {
        const std::string what = e.what();
        CHECK(what.find("nosuchpaper") != std::string::npos);
        CHECK(what.find("fischetti1996") != std::string::npos);
        CHECK(what.find("vandewalle1986") != std::string::npos);
    }
}

TEST_CASE("every listed set has all four positive-uniaxial values") {
    for (const auto& label : table1_labels()) {
        const auto s = table1_set(label);
        CHECK(s.xi_u_delta > 0);
        CHECK(s.xi_u_L > 0);
        MaterialParams p = default_params();
        p.deformation = s;
        CHECK_NOTHROW(validate(p));
    }
}

TEST_CASE("validation rejects broken invariants") {
    MaterialParams p = default_params();
    p.elastic.c12 = 200.0;
    CHECK_THROWS_AS(validate(p), DomainError);

    p = default_params();
    p.masses(ValleyKind::L3).m_out = 1.0;
    CHECK_THROWS_AS(validate(p), DomainError);

    p = default_params();
    p.lattice.a_ge = 5.0;
    CHECK_THROWS_AS(validate(p), DomainError);

    p = default_params();
    p.band.e0_L = 1.0;
    CHECK_THROWS_AS(validate(p), DomainError);

    p = default_params();
    p.deformation.xi_u_L = -1.0;
    CHECK_THROWS_AS(validate(p), DomainError);

    p = default_params();
    p.constants.hbar2_over_2m0 = 0.04;
    CHECK_THROWS_AS(validate(p), DomainError);
}

TEST_CASE("valley names") {
    for (ValleyKind v : all_valleys) CHECK(parse_valley(to_string(v)) == v);
    CHECK(parse_valley("D6") == ValleyKind::Delta6);
    CHECK_THROWS_AS(parse_valley("X"), LookupError);
}

TEST_CASE("quadratic ranges bracket the defaults") {
    const auto r = quadratic_ranges();
    const auto q = default_params().quadratic;
    for (std::size_t k = 0; k < 3; ++k) {
        const double v = q(all_valleys[k]);
        CHECK(v <= std::max(r[k].lo, r[k].hi));
        CHECK(v >= std::min(r[k].lo, r[k].hi));
    }
    CHECK(r[0].lo == -15.0);
    CHECK(r[0].hi == -30.0);
    CHECK(r[2].hi == -15.0);
}
