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

#include "strainvalley/material_db.hpp"

#include "strainvalley/errors.hpp"

#include <cmath>

namespace strainvalley {

namespace {

// Literature deformation potentials (eV). Ordered as
// xi_u_delta, xi_d_delta, xi_u_L, xi_d_L. Sources that leave any of the four
// blank are not listed. The dilatational values are stored as published;
// some sources report them as the hydrostatic combination with the valence
// band potential folded in.
struct Table1Row {
    const char* label;
    double xi_u_delta;
    double xi_d_delta;
    double xi_u_L;
    double xi_d_L;
};

constexpr std::array<Table1Row, 4> kTable1{{
    {"vandewalle1986", 9.16, 1.10, 16.14, -6.00},
    {"friedel1989", 8.47, 1.03, 12.35, -4.90},
    {"fischetti1996", 10.5, 1.1, 18.0, -7.0},
    {"rideau2006", 9.01, 0.94, 15.1, -6.06},
}};

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("invalid material parameters: ") + what);
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::string_view to_string(ValleyKind valley) {
    switch (valley) {
    case ValleyKind::L1: return "L1";
    case ValleyKind::L3: return "L3";
    case ValleyKind::Delta6: return "Delta6";
    }
    return "?";
}

ValleyKind parse_valley(std::string_view name) {
    if (name == "L1") return ValleyKind::L1;
    if (name == "L3") return ValleyKind::L3;
    if (name == "Delta6" || name == "D6") return ValleyKind::Delta6;
    throw LookupError("unknown valley '" + std::string(name) + "' (valid: L1, L3, Delta6)");
}

double QuadraticCoefficients::operator()(ValleyKind valley) const {
    switch (valley) {
    case ValleyKind::L1: return d_L1;
    case ValleyKind::L3: return d_L3;
    case ValleyKind::Delta6: return d_delta6;
    }
    return 0.0;
}

double& QuadraticCoefficients::operator()(ValleyKind valley) {
    switch (valley) {
    case ValleyKind::L1: return d_L1;
    case ValleyKind::L3: return d_L3;
    default: return d_delta6;
    }
}

MaterialParams default_params() {
    MaterialParams p;
    p.elastic = {165.7, 63.9, 79.6};
    p.deformation = table1_set("vandewalle1986");
    p.quadratic = {-22.5, -15.0, -10.0};
    p.masses(ValleyKind::L1) = {1.70, 1.59};
    p.masses(ValleyKind::L3) = {0.13, 1.59};
    p.masses(ValleyKind::Delta6) = {0.26, 1.59};
    p.masses.m_inplane_L1 = 0.12;
    p.lattice = {5.4307, 5.6575, -0.0273};
    p.band = {2.10, 1.17, 0.28};
    p.constants = {kHbar2Over2M0, kBurgersSi};
    return p;
}

DeformationPotentials table1_set(std::string_view source_label) {
    for (const auto& row : kTable1) {
        if (source_label == row.label) {
            return {row.xi_u_delta, row.xi_d_delta, row.xi_u_L, row.xi_d_L, row.label};
        }
    }
    std::string valid;
    for (const auto& row : kTable1) {
        if (!valid.empty()) valid += ", ";
        valid += row.label;
    }
    throw LookupError("unknown deformation-potential set '" + std::string(source_label) +
                      "' (valid: " + valid + ")");
}

std::vector<std::string> table1_labels() {
    std::vector<std::string> out;
    for (const auto& row : kTable1) out.emplace_back(row.label);
    return out;
}

std::array<QuadraticRange, 3> quadratic_ranges() {
    return {{{-15.0, -30.0}, {-10.0, -20.0}, {-5.0, -15.0}}};
}

void validate(const ElasticConstants& c) {
    require(finite(c.c11) && finite(c.c12) && finite(c.c44), "elastic constants must be finite");
    require(c.c11 > 0 && c.c12 > 0 && c.c44 > 0, "elastic constants must be positive");
    require(c.c11 > c.c12, "c11 must exceed c12");
}

void validate(const MaterialParams& p) {
    validate(p.elastic);
    const auto& d = p.deformation;
    require(finite(d.xi_u_delta) && finite(d.xi_d_delta) && finite(d.xi_u_L) && finite(d.xi_d_L),
            "deformation potentials must be finite");
    require(d.xi_u_delta > 0 && d.xi_u_L > 0, "uniaxial deformation potentials must be positive");
    require(finite(p.quadratic.d_L1) && finite(p.quadratic.d_L3) && finite(p.quadratic.d_delta6),
            "quadratic coefficients must be finite");
    const double m_out = p.masses(ValleyKind::L1).m_out;
    for (const auto& m : p.masses.by_valley) {
        require(m.m_in > 0 && m.m_out > 0, "effective masses must be positive");
        require(m.m_out == m_out, "barrier mass must be the same for every valley");
    }
    require(p.lattice.a_ge > p.lattice.a_si && p.lattice.a_si > 0,
            "a_ge must exceed a_si > 0");
    // a(x) must stay strictly increasing on [0, 1] for the strain inversion.
    const double span = p.lattice.a_ge - p.lattice.a_si;
    require(std::abs(p.lattice.bowing_b) < span, "bowing must be small against a_ge - a_si");
    require(p.band.e0_L > p.band.e0_delta, "e0_L must exceed e0_delta");
    require(p.band.v0_offset_111 > 0, "band offset must be positive");
    require(std::abs(p.constants.hbar2_over_2m0 / 0.0381 - 1.0) < 1e-3,
            "hbar2_over_2m0 must be within 0.1 % of 0.0381 eV nm^2");
    require(p.constants.burgers_si > 0, "Burgers vector must be positive");
}

}  // namespace strainvalley
