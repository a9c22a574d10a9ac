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

/** @file design_engine.hpp
 *  @brief Strain plus confinement valley energies for Si1-xGex / Si(111) /
 *         Si1-xGex, the L1 / Delta6 crossover strain, its Ge fraction, and
 *         parameter-sensitivity envelopes.
 *
 *  The well strain is measured against the relaxed alloy,
 *  eps_par = a(x) / a_Si - 1, with a(x) the bowed Vegard interpolation.
 *  (Dividing by the film constant instead changes eps_par by ~0.2 % at x = 1.)
 */

#ifndef STRAINVALLEY_DESIGN_ENGINE_HPP
#define STRAINVALLEY_DESIGN_ENGINE_HPP

#include "strainvalley/material_db.hpp"
#include "strainvalley/valley_shift.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strainvalley {

/// Upper end of the crossover search; above the pure-Ge strain so that
/// "no crossing" and "needs x > 1" stay distinguishable.
inline constexpr double kCrossoverStrainCeiling = 0.06;
inline constexpr double kMinCrossoverThickness = 0.5;  // nm
inline constexpr double kMaxCrossoverThickness = 50.0;  // nm

/// Site of a well: thickness plus the strain or Ge fraction that sets it.
struct DesignPoint {
    double thickness_t = 0.0;
    double eps_par = 0.0;
    double ge_fraction_x = 0.0;

    static DesignPoint from_strain(double t, double eps_par, const LatticeParams& lat);
    static DesignPoint from_fraction(double t, double x, const LatticeParams& lat);
};

/// bulk_energy plus the ground-state confinement energy of that valley.
ValleyEnergy total_energy(ValleyKind valley, const MaterialParams& params, double t, double eps_par);

struct CrossoverResult {
    double thickness_t = 0.0;
    double eps_critical = 0.0;
    double x_critical = 0.0;
    double bracket_width = 0.0;
};

struct StrainRoot {
    double eps = 0.0;
    double bracket_width = 0.0;
};

/// Strain in (0, 0.06] where E(Delta6) = E(L1) at thickness t.
/// Throws InfeasibleError (AlreadyBelow / NeverCrosses) when the bracket
/// holds no sign change, DomainError for t outside [0.5, 50] nm.
StrainRoot crossover_strain(const MaterialParams& params, double t);

/// crossover_strain plus its Ge fraction. Throws InfeasibleError
/// (RequiresXAboveOne) when the strain exceeds the pure-Ge value.
CrossoverResult critical_strain(const MaterialParams& params, double t);

/// a(x) = (1 - x) a_Si + x a_Ge + b x (1 - x), Angstrom.
double vegard_a(double x, const LatticeParams& lat);

/// eps_par = a(x) / a_Si - 1.
double x_to_strain(double x, const LatticeParams& lat);

/// Inverse of x_to_strain by bisection on [0, 1].
double strain_to_x(double eps_par, const LatticeParams& lat);

/// One grid point of a sweep; error is set when result is empty.
struct CrossoverPoint {
    double thickness_t = 0.0;
    std::optional<CrossoverResult> result;
    std::string error;
};

std::vector<CrossoverPoint> crossover_curve(const MaterialParams& params,
                                            std::span<const double> t_grid);

struct Splitting {
    double delta6_minus_l1 = 0.0;  // eV
    double l3_minus_l1 = 0.0;      // eV
};

Splitting splitting_report(const MaterialParams& params, double t, double x);

enum class SensitivityMode { Linear10pct, QuadraticRange, Both };

std::string_view to_string(SensitivityMode mode);
SensitivityMode parse_sensitivity_mode(std::string_view name);

inline constexpr double kLinearVariation = 0.10;

struct SensitivityBand {
    double thickness_t = 0.0;
    double x_low = 0.0;
    double x_nominal = 0.0;
    double x_high = 0.0;
    /// Extreme crossover strains over the corners that do cross in (0, 0.06].
    double eps_low = 0.0;
    double eps_high = 0.0;
    /// Corners whose crossover needs x > 1 (or never occurs) are clipped to
    /// x = 1; corners already inverted at zero strain are clipped to x = 0.
    int clipped_corners = 0;
    int corner_count = 0;
    bool nominal_clipped = false;
};

/// Scales the four first-order deformation potentials by the given factors,
/// ordered xi_u_delta, xi_d_delta, xi_u_L, xi_d_L.
MaterialParams scale_linear(const MaterialParams& params, const std::array<double, 4>& factors);

/// Parameter sets at the corners of the perturbation box:
///   Linear10pct     each first-order potential x0.9 / x1.1 (16 corners)
///   QuadraticRange  each quadratic coefficient at its range ends (8 corners)
///   Both            the product of the two (128 corners)
std::vector<MaterialParams> sensitivity_corners(const MaterialParams& params, SensitivityMode mode);

std::vector<SensitivityBand> sensitivity_band(const MaterialParams& params,
                                              std::span<const double> t_grid,
                                              SensitivityMode mode);

}  // namespace strainvalley

#endif
