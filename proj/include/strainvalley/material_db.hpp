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

/** @file material_db.hpp
 *  @brief Physical parameters for a strained Si(111) well between SiGe barriers.
 *
 *  Library-wide units: energies in eV, lengths in nm, stiffness in GPa,
 *  strain dimensionless. Lattice constants are the one exception and are
 *  kept in Angstrom, the unit they are tabulated in.
 */

#ifndef STRAINVALLEY_MATERIAL_DB_HPP
#define STRAINVALLEY_MATERIAL_DB_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace strainvalley {

/// Conduction-band valleys of Si under (111) biaxial strain.
enum class ValleyKind { L1, L3, Delta6 };

inline constexpr std::array<ValleyKind, 3> all_valleys{ValleyKind::L1, ValleyKind::L3,
                                                       ValleyKind::Delta6};

std::string_view to_string(ValleyKind valley);

/// Parses "L1", "L3" or "Delta6" (also accepts "D6"). Throws LookupError.
ValleyKind parse_valley(std::string_view name);

struct ElasticConstants {
    double c11 = 0.0;  // GPa
    double c12 = 0.0;
    double c44 = 0.0;
};

struct DeformationPotentials {
    double xi_u_delta = 0.0;  // eV
    double xi_d_delta = 0.0;
    double xi_u_L = 0.0;
    double xi_d_L = 0.0;
    std::string source_label;
};

/// Per-valley coefficient of eps_par^2 in the second-order energy shift.
struct QuadraticCoefficients {
    double d_L1 = 0.0;  // eV
    double d_L3 = 0.0;
    double d_delta6 = 0.0;

    double operator()(ValleyKind valley) const;
    double& operator()(ValleyKind valley);
};

/// Confinement-direction masses in units of the free electron mass.
struct ValleyMass {
    double m_in = 0.0;   // inside the Si well
    double m_out = 0.0;  // inside the SiGe barrier
};

struct EffectiveMasses {
    std::array<ValleyMass, 3> by_valley{};
    /// In-plane L1 mass; stored for reference, no transport model uses it.
    double m_inplane_L1 = 0.0;

    const ValleyMass& operator()(ValleyKind valley) const {
        return by_valley[static_cast<std::size_t>(valley)];
    }
    ValleyMass& operator()(ValleyKind valley) {
        return by_valley[static_cast<std::size_t>(valley)];
    }
};

struct LatticeParams {
    double a_si = 0.0;      // Angstrom
    double a_ge = 0.0;      // Angstrom
    double bowing_b = 0.0;  // Angstrom
};

struct BandEdges {
    double e0_L = 0.0;           // unstrained L edge, eV
    double e0_delta = 0.0;       // unstrained Delta edge, eV
    double v0_offset_111 = 0.0;  // conduction-band offset of the well, eV
};

struct PhysicalConstants {
    double hbar2_over_2m0 = 0.0;  // eV nm^2
    double burgers_si = 0.0;      // nm
};

struct MaterialParams {
    ElasticConstants elastic;
    DeformationPotentials deformation;
    QuadraticCoefficients quadratic;
    EffectiveMasses masses;
    LatticeParams lattice;
    BandEdges band;
    PhysicalConstants constants;
};

/// hbar^2 / (2 m0) in eV nm^2 from CODATA 2018 (hbar = 1.054571817e-34 J s,
/// m0 = 9.1093837015e-31 kg, e = 1.602176634e-19 C).
inline constexpr double kHbar2Over2M0 = 0.03809982110968584;

inline constexpr double kBurgersSi = 0.384;  // nm

MaterialParams default_params();

/// Deformation potentials of one literature source. Only sources that give
/// all four values are selectable. Throws LookupError listing the valid labels.
DeformationPotentials table1_set(std::string_view source_label);

std::vector<std::string> table1_labels();

/// Quadratic-coefficient intervals used for sensitivity studies.
struct QuadraticRange {
    double lo = 0.0;
    double hi = 0.0;
};
std::array<QuadraticRange, 3> quadratic_ranges();

/// Throws DomainError naming the first violated invariant.
void validate(const ElasticConstants& c);
void validate(const MaterialParams& params);

}  // namespace strainvalley

#endif
