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

/** @file quantum_well.hpp
 *  @brief Even ground state of a finite square well with a heterointerface
 *         mass step (BenDaniel-Duke matching of psi and psi'/m).
 *
 *  Inside the well psi = cos(k_in z), outside psi ~ exp(-k_out |z|), and the
 *  eigenvalue satisfies
 *
 *      tan(k_in t / 2) = sqrt( (m_in / m_out) (V0 - E) / E ).
 *
 *  The first tan branch, k_in t / 2 in (0, pi/2), always holds exactly one root.
 */

#ifndef STRAINVALLEY_QUANTUM_WELL_HPP
#define STRAINVALLEY_QUANTUM_WELL_HPP

#include "strainvalley/material_db.hpp"

#include <span>
#include <vector>

namespace strainvalley {

struct WellConfig {
    double thickness_t = 0.0;  // nm
    double barrier_v0 = 0.0;   // eV
    double m_in = 0.0;         // m0
    double m_out = 0.0;        // m0
    double hbar2_over_2m0 = kHbar2Over2M0;
};

struct WellSolution {
    double energy_eq = 0.0;  // eV above the well bottom
    double k_in = 0.0;       // nm^-1
    double k_out = 0.0;      // nm^-1
    /// Normalised matching mismatch
    ///   |(k_in/m_in) sin(k_in t/2) - (k_out/m_out) cos(k_in t/2)|
    ///     / (k_in/m_in + k_out/m_out),
    /// i.e. the eigenvalue condition cleared of the tan pole.
    double residual = 0.0;
    /// Final bisection bracket; the eigenvalue condition changes sign across it.
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    int iterations = 0;
};

/// Throws DomainError for non-positive inputs, SolverError if the bisection
/// cap is exceeded.
WellSolution ground_state(const WellConfig& cfg);

/// pi^2 (hbar^2 / 2 m0) / (m_in t^2), the infinite-barrier ground level.
double infinite_well_reference(double thickness_t, double m_in,
                               double hbar2_over_2m0 = kHbar2Over2M0);

/// Well description for one valley of the Si(111) layer.
WellConfig well_config(ValleyKind valley, const MaterialParams& params, double thickness_t);

struct ThicknessEnergy {
    double t = 0.0;   // nm
    double eq = 0.0;  // eV
};

/// Ground-state confinement energy over an ascending grid of thicknesses.
std::vector<ThicknessEnergy> eq_vs_thickness(ValleyKind valley, const MaterialParams& params,
                                             std::span<const double> t_grid);

}  // namespace strainvalley

#endif
