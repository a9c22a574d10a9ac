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

/** @file relaxation.hpp
 *  @brief People-Bean critical thickness of a strained Si(111) layer on
 *         relaxed Si1-xGex.
 *
 *      h_c = A ln(h_c / b),   A = b / (32 pi f^2) * (1 - nu) / (1 + nu)
 *
 *  with nu the effective [111] Poisson ratio. The equation has two positive
 *  roots when A > e b; the physical one is the larger.
 */

#ifndef STRAINVALLEY_RELAXATION_HPP
#define STRAINVALLEY_RELAXATION_HPP

#include "strainvalley/material_db.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace strainvalley {

struct Poisson111 {
    double nu_111 = 0.0;
    /// R = 2 (C11 + 2 C12 - 2 C44) / (C11 + 2 C12 + 4 C44); nu = R / (2 + R).
    double r_111 = 0.0;
};

Poisson111 poisson_111(const ElasticConstants& elastic);

enum class MisfitModel {
    Linear,  // f = misfit_slope * x
    Vegard   // f = a(x) / a_Si - 1 with the bowed lattice constant
};

std::string_view to_string(MisfitModel model);
MisfitModel parse_misfit_model(std::string_view name);

inline constexpr double kDefaultMisfitSlope = 0.0418;

struct RelaxationInput {
    double ge_fraction_x = 0.0;
    double burgers_b = kBurgersSi;  // nm
    ElasticConstants elastic;
    double misfit_slope = kDefaultMisfitSlope;
    MisfitModel misfit_model = MisfitModel::Linear;
    LatticeParams lattice;  // used by MisfitModel::Vegard

    static RelaxationInput from_params(const MaterialParams& params, double x);
};

struct CriticalThickness {
    double h_c = 0.0;       // nm
    double misfit_f = 0.0;
    double nu_111 = 0.0;
    int iterations = 0;
    double prefactor_a = 0.0;  // nm
};

double misfit(const RelaxationInput& inp);

/// Fixed-point iteration h <- A ln(h / b) from 50 b, falling back to bisection
/// above h = A. Throws InfeasibleError (Unbounded) for zero misfit,
/// InfeasibleError (NoRoot) when A <= e b, SolverError if neither converges.
CriticalThickness critical_thickness(const RelaxationInput& inp);

/// Critical thickness over an ascending x grid inside (0, 1]. The x value of
/// `templ` is ignored.
std::vector<CriticalThickness> hc_curve(const RelaxationInput& templ, std::span<const double> x_grid);

}  // namespace strainvalley

#endif
