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

#include "strainvalley/design_engine.hpp"

#include "strainvalley/errors.hpp"
#include "strainvalley/quantum_well.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strainvalley {

namespace {

constexpr int kMaxBisections = 200;

void check_fraction(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream os;
        os << "Ge fraction " << x << " outside [0, 1]";
        throw DomainError(os.str());
    }
}

void check_thickness(double t) {
    if (!(t >= kMinCrossoverThickness && t <= kMaxCrossoverThickness)) {
        std::ostringstream os;
        os << "thickness " << t << " nm outside the crossover range [0.5, 50] nm";
        throw DomainError(os.str());
    }
}

double confinement(ValleyKind valley, const MaterialParams& params, double t) {
    return ground_state(well_config(valley, params, t)).energy_eq;
}

// E(Delta6) - E(L1) with the confinement terms already evaluated. Positive
// once L1 is the lowest valley.
double gap(const MaterialParams& p, double eq_l1, double eq_d6, double eps) {
    const StrainState s = strain_state(p.elastic, eps);
    const double d6 = p.band.e0_delta + linear_shift(ValleyKind::Delta6, p.deformation, s) +
                      quadratic_shift(ValleyKind::Delta6, p.quadratic, eps) + eq_d6;
    const double l1 = p.band.e0_L + linear_shift(ValleyKind::L1, p.deformation, s) +
                      quadratic_shift(ValleyKind::L1, p.quadratic, eps) + eq_l1;
    return d6 - l1;
}

StrainRoot solve_crossover(const MaterialParams& p, double t, double eq_l1, double eq_d6) {
    double lo = 0.0;
    double hi = kCrossoverStrainCeiling;
    const double g_lo = gap(p, eq_l1, eq_d6, lo);
    const double g_hi = gap(p, eq_l1, eq_d6, hi);
    if (g_lo >= 0.0) {
        std::ostringstream os;
        os << "no crossover at t=" << t << " nm: L1 is already at or below Delta6 at zero strain";
        throw InfeasibleError(InfeasibleError::Reason::AlreadyBelow, os.str());
    }
    if (g_hi < 0.0) {
        std::ostringstream os;
        os << "no crossover at t=" << t << " nm: L1 stays above Delta6 up to eps_par="
           << kCrossoverStrainCeiling;
        throw InfeasibleError(InfeasibleError::Reason::NeverCrosses, os.str());
    }
    int it = 0;
    for (; it < kMaxBisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (gap(p, eq_l1, eq_d6, mid) < 0.0) lo = mid;
        else hi = mid;
    }
    if (it == kMaxBisections) throw SolverError("crossover bisection did not converge");
    return {0.5 * (lo + hi), hi - lo};
}

// Crossover strain for one corner, with the nominal confinement reused.
struct CornerOutcome {
    double x = 0.0;
    std::optional<double> eps;
    bool clipped = false;
};

CornerOutcome corner_outcome(const MaterialParams& p, double t, double eq_l1, double eq_d6) {
    const double eps_ceiling = x_to_strain(1.0, p.lattice);
    try {
        const StrainRoot root = solve_crossover(p, t, eq_l1, eq_d6);
        if (root.eps > eps_ceiling) return {1.0, root.eps, true};
        return {strain_to_x(root.eps, p.lattice), root.eps, false};
    } catch (const InfeasibleError& e) {
        if (e.reason() == InfeasibleError::Reason::AlreadyBelow) return {0.0, std::nullopt, true};
        return {1.0, std::nullopt, true};
    }
}

}  // namespace

DesignPoint DesignPoint::from_strain(double t, double eps_par, const LatticeParams& lat) {
    return {t, eps_par, strain_to_x(eps_par, lat)};
}

DesignPoint DesignPoint::from_fraction(double t, double x, const LatticeParams& lat) {
    return {t, x_to_strain(x, lat), x};
}

ValleyEnergy total_energy(ValleyKind valley, const MaterialParams& params, double t, double eps_par) {
    ValleyEnergy e = bulk_energy(valley, params, eps_par);
    e.eq = confinement(valley, params, t);
    e.total = e.e0 + e.de1 + e.de2 + e.eq;
    return e;
}

StrainRoot crossover_strain(const MaterialParams& params, double t) {
    check_thickness(t);
    return solve_crossover(params, t, confinement(ValleyKind::L1, params, t),
                           confinement(ValleyKind::Delta6, params, t));
}

CrossoverResult critical_strain(const MaterialParams& params, double t) {
    const StrainRoot root = crossover_strain(params, t);
    return {t, root.eps, strain_to_x(root.eps, params.lattice), root.bracket_width};
}

double vegard_a(double x, const LatticeParams& lat) {
    check_fraction(x);
    return (1.0 - x) * lat.a_si + x * lat.a_ge + lat.bowing_b * x * (1.0 - x);
}

double x_to_strain(double x, const LatticeParams& lat) {
    return vegard_a(x, lat) / lat.a_si - 1.0;
}

double strain_to_x(double eps_par, const LatticeParams& lat) {
    const double ceiling = x_to_strain(1.0, lat);
    if (eps_par > ceiling) {
        std::ostringstream os;
        os << "strain " << eps_par << " requires x > 1 (pure Ge gives " << ceiling << ")";
        throw InfeasibleError(InfeasibleError::Reason::RequiresXAboveOne, os.str());
    }
    if (!(eps_par >= 0.0)) {
        std::ostringstream os;
        os << "strain " << eps_par << " is below the x = 0 value 0";
        throw DomainError(os.str());
    }
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < kMaxBisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (x_to_strain(mid, lat) < eps_par) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<CrossoverPoint> crossover_curve(const MaterialParams& params,
                                            std::span<const double> t_grid) {
    std::vector<CrossoverPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        CrossoverPoint pt;
        pt.thickness_t = t;
        try {
            pt.result = critical_strain(params, t);
        } catch (const std::exception& e) {
            pt.error = e.what();
        }
        out.push_back(std::move(pt));
    }
    return out;
}

Splitting splitting_report(const MaterialParams& params, double t, double x) {
    const double eps = x_to_strain(x, params.lattice);
    const double l1 = total_energy(ValleyKind::L1, params, t, eps).total;
    const double l3 = total_energy(ValleyKind::L3, params, t, eps).total;
    const double d6 = total_energy(ValleyKind::Delta6, params, t, eps).total;
    return {d6 - l1, l3 - l1};
}

std::string_view to_string(SensitivityMode mode) {
    switch (mode) {
    case SensitivityMode::Linear10pct: return "linear10pct";
    case SensitivityMode::QuadraticRange: return "quadratic_range";
    case SensitivityMode::Both: return "both";
    }
    return "?";
}

SensitivityMode parse_sensitivity_mode(std::string_view name) {
    if (name == "linear10pct") return SensitivityMode::Linear10pct;
    if (name == "quadratic_range") return SensitivityMode::QuadraticRange;
    if (name == "both") return SensitivityMode::Both;
    throw LookupError("unknown sensitivity mode '" + std::string(name) +
                      "' (valid: linear10pct, quadratic_range, both)");
}

MaterialParams scale_linear(const MaterialParams& params, const std::array<double, 4>& f) {
    MaterialParams p = params;
    p.deformation.xi_u_delta *= f[0];
    p.deformation.xi_d_delta *= f[1];
    p.deformation.xi_u_L *= f[2];
    p.deformation.xi_d_L *= f[3];
    return p;
}

std::vector<MaterialParams> sensitivity_corners(const MaterialParams& params, SensitivityMode mode) {
    std::vector<MaterialParams> linear;
    if (mode == SensitivityMode::QuadraticRange) {
        linear.push_back(params);
    } else {
        const double lo = 1.0 - kLinearVariation, hi = 1.0 + kLinearVariation;
        for (unsigned bits = 0; bits < 16; ++bits) {
            std::array<double, 4> f{};
            for (unsigned k = 0; k < 4; ++k) f[k] = (bits >> k) & 1u ? hi : lo;
            linear.push_back(scale_linear(params, f));
        }
    }
    if (mode == SensitivityMode::Linear10pct) return linear;

    const auto ranges = quadratic_ranges();
    std::vector<MaterialParams> out;
    for (const auto& base : linear) {
        for (unsigned bits = 0; bits < 8; ++bits) {
            MaterialParams p = base;
            for (unsigned k = 0; k < 3; ++k) {
                p.quadratic(all_valleys[k]) = (bits >> k) & 1u ? ranges[k].hi : ranges[k].lo;
            }
            out.push_back(p);
        }
    }
    return out;
}

std::vector<SensitivityBand> sensitivity_band(const MaterialParams& params,
                                              std::span<const double> t_grid,
                                              SensitivityMode mode) {
    const auto corners = sensitivity_corners(params, mode);
    std::vector<SensitivityBand> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        check_thickness(t);
        // Perturbations leave masses and offset alone, so confinement is shared.
        const double eq_l1 = confinement(ValleyKind::L1, params, t);
        const double eq_d6 = confinement(ValleyKind::Delta6, params, t);

        SensitivityBand band;
        band.thickness_t = t;
        band.corner_count = static_cast<int>(corners.size());
        const CornerOutcome nominal = corner_outcome(params, t, eq_l1, eq_d6);
        band.x_nominal = nominal.x;
        band.nominal_clipped = nominal.clipped;
        band.x_low = 1.0;
        band.x_high = 0.0;
        band.eps_low = kCrossoverStrainCeiling;
        band.eps_high = 0.0;
        for (const auto& corner : corners) {
            const CornerOutcome c = corner_outcome(corner, t, eq_l1, eq_d6);
            band.x_low = std::min(band.x_low, c.x);
            band.x_high = std::max(band.x_high, c.x);
            if (c.eps) {
                band.eps_low = std::min(band.eps_low, *c.eps);
                band.eps_high = std::max(band.eps_high, *c.eps);
            }
            if (c.clipped) ++band.clipped_corners;
        }
        out.push_back(band);
    }
    return out;
}

}  // namespace strainvalley
