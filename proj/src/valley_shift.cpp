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

#include "strainvalley/valley_shift.hpp"

#include "strainvalley/errors.hpp"

#include <cmath>
#include <string>

namespace strainvalley {

double linear_shift(ValleyKind valley, const DeformationPotentials& dp, const StrainState& s) {
    const double par = s.eps_par;
    const double perp = s.eps_perp;
    const double dilation = 2.0 * par + perp;
    switch (valley) {
    case ValleyKind::L1:
        return dp.xi_d_L * dilation + dp.xi_u_L * perp;
    case ValleyKind::L3:
        return dp.xi_d_L * dilation + dp.xi_u_L * (8.0 * par + perp) / 9.0;
    case ValleyKind::Delta6:
        return dp.xi_d_delta * dilation + dp.xi_u_delta * dilation / 3.0;
    }
    return 0.0;
}

double quadratic_shift(ValleyKind valley, const QuadraticCoefficients& q, double eps_par) {
    return q(valley) * eps_par * eps_par;
}

ValleyEnergy bulk_energy(ValleyKind valley, const MaterialParams& params, double eps_par) {
    if (!(std::abs(eps_par) <= kMaxSupportedStrain)) {
        throw DomainError("strain " + std::to_string(eps_par) +
                          " outside the supported range |eps_par| <= 0.10");
    }
    const StrainState s = strain_state(params.elastic, eps_par);
    ValleyEnergy e;
    e.valley = valley;
    e.e0 = valley == ValleyKind::Delta6 ? params.band.e0_delta : params.band.e0_L;
    e.de1 = linear_shift(valley, params.deformation, s);
    e.de2 = quadratic_shift(valley, params.quadratic, eps_par);
    e.eq = 0.0;
    e.total = e.e0 + e.de1 + e.de2;
    return e;
}

}  // namespace strainvalley
