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

#include "strainvalley/relaxation.hpp"

#include "strainvalley/design_engine.hpp"
#include "strainvalley/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace strainvalley {

namespace {

constexpr double kTolerance = 1e-9;  // nm
constexpr int kMaxFixedPoint = 10000;
constexpr int kMaxBisections = 400;

}  // namespace

Poisson111 poisson_111(const ElasticConstants& c) {
    const double den = c.c11 + 2.0 * c.c12 + 4.0 * c.c44;
    if (!(den > 0.0)) throw DomainError("C11 + 2 C12 + 4 C44 must be positive");
    const double r = 2.0 * (c.c11 + 2.0 * c.c12 - 2.0 * c.c44) / den;
    if (!(2.0 + r > 0.0)) throw DomainError("2 + R111 must be positive");
    return {r / (2.0 + r), r};
}

std::string_view to_string(MisfitModel model) {
    return model == MisfitModel::Linear ? "linear" : "vegard";
}

MisfitModel parse_misfit_model(std::string_view name) {
    if (name == "linear") return MisfitModel::Linear;
    if (name == "vegard") return MisfitModel::Vegard;
    throw LookupError("unknown misfit model '" + std::string(name) + "' (valid: linear, vegard)");
}

RelaxationInput RelaxationInput::from_params(const MaterialParams& params, double x) {
    RelaxationInput inp;
    inp.ge_fraction_x = x;
    inp.burgers_b = params.constants.burgers_si;
    inp.elastic = params.elastic;
    inp.lattice = params.lattice;
    return inp;
}

double misfit(const RelaxationInput& inp) {
    if (!(inp.ge_fraction_x >= 0.0 && inp.ge_fraction_x <= 1.0)) {
        throw DomainError("Ge fraction " + std::to_string(inp.ge_fraction_x) + " outside [0, 1]");
    }
    if (inp.misfit_model == MisfitModel::Vegard) return x_to_strain(inp.ge_fraction_x, inp.lattice);
    return inp.misfit_slope * inp.ge_fraction_x;
}

CriticalThickness critical_thickness(const RelaxationInput& inp) {
    if (!(inp.burgers_b > 0.0)) throw DomainError("Burgers vector must be positive");
    const double f = misfit(inp);
    if (f == 0.0) {
        throw InfeasibleError(InfeasibleError::Reason::Unbounded,
                              "zero misfit: critical thickness is unbounded");
    }
    const Poisson111 nu = poisson_111(inp.elastic);
    const double b = inp.burgers_b;
    const double a = b / (32.0 * std::numbers::pi * f * f) * (1.0 - nu.nu_111) / (1.0 + nu.nu_111);

    CriticalThickness out;
    out.misfit_f = f;
    out.nu_111 = nu.nu_111;
    out.prefactor_a = a;

    // h - A ln(h/b) has its minimum A (1 - ln(A/b)) at h = A.
    if (!(a > std::numbers::e * b)) {
        std::ostringstream os;
        os << "no critical thickness: prefactor A=" << a << " nm does not exceed e*b";
        throw InfeasibleError(InfeasibleError::Reason::NoRoot, os.str());
    }

    // The map h -> A ln(h/b) has slope A/h < 1 above h = A, so it contracts
    // onto the larger root from any start above A.
    double h = 50.0 * b;
    if (h <= a) h = 2.0 * a;
    for (int it = 1; it <= kMaxFixedPoint; ++it) {
        const double next = a * std::log(h / b);
        if (std::abs(next - h) < kTolerance) {
            out.h_c = next;
            out.iterations = it;
            return out;
        }
        h = next;
    }

    double lo = a;
    double hi = 2.0 * a;
    while (hi - a * std::log(hi / b) <= 0.0) hi *= 2.0;
    int it = 0;
    while (hi - lo > kTolerance * 1e-3 && it < kMaxBisections) {
        const double mid = 0.5 * (lo + hi);
        if (mid - a * std::log(mid / b) < 0.0) lo = mid;
        else hi = mid;
        ++it;
    }
    if (it == kMaxBisections) {
        std::ostringstream os;
        os << "critical thickness did not converge for x=" << inp.ge_fraction_x;
        throw SolverError(os.str());
    }
    out.h_c = 0.5 * (lo + hi);
    out.iterations = kMaxFixedPoint + it;
    return out;
}

std::vector<CriticalThickness> hc_curve(const RelaxationInput& templ, std::span<const double> x_grid) {
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] > 0.0 && x_grid[i] <= 1.0) || (i > 0 && !(x_grid[i] > x_grid[i - 1]))) {
            throw DomainError("x grid must be strictly ascending inside (0, 1]");
        }
    }
    std::vector<CriticalThickness> out;
    out.reserve(x_grid.size());
    for (double x : x_grid) {
        RelaxationInput inp = templ;
        inp.ge_fraction_x = x;
        out.push_back(critical_thickness(inp));
    }
    return out;
}

}  // namespace strainvalley
