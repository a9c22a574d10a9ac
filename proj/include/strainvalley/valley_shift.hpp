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

/** @file valley_shift.hpp
 *  @brief Strain shifts of the L1, L3 and Delta6 conduction-band edges.
 */

#ifndef STRAINVALLEY_VALLEY_SHIFT_HPP
#define STRAINVALLEY_VALLEY_SHIFT_HPP

#include "strainvalley/elasticity.hpp"
#include "strainvalley/material_db.hpp"

namespace strainvalley {

/// Energy breakdown of one valley. eq is the confinement energy (0 for bulk).
struct ValleyEnergy {
    ValleyKind valley = ValleyKind::L1;
    double e0 = 0.0;
    double de1 = 0.0;
    double de2 = 0.0;
    double eq = 0.0;
    double total = 0.0;
};

/// Largest |eps_par| the quadratic fit is used for.
inline constexpr double kMaxSupportedStrain = 0.10;

/// First-order deformation-potential shift:
///   L1:     Xd_L (2 par + perp) + Xu_L perp
///   L3:     Xd_L (2 par + perp) + Xu_L (8 par + perp) / 9
///   Delta6: (Xd_D + Xu_D / 3) (2 par + perp)
double linear_shift(ValleyKind valley, const DeformationPotentials& dp, const StrainState& s);

/// d_valley * eps_par^2.
double quadratic_shift(ValleyKind valley, const QuadraticCoefficients& q, double eps_par);

/// Unconfined band-edge energy. Throws DomainError for |eps_par| > 0.10.
ValleyEnergy bulk_energy(ValleyKind valley, const MaterialParams& params, double eps_par);

}  // namespace strainvalley

#endif
