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

#include "strainvalley/quantum_well.hpp"

#include "strainvalley/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace strainvalley {

namespace {

constexpr double kEdgeOffset = 1e-9;  // eV, keeps the bracket off E = 0 and E = V0
constexpr int kMaxBisections = 400;

struct WaveNumbers {
    double k_in;
    double k_out;
};

WaveNumbers wave_numbers(const WellConfig& cfg, double e) {
    const double h = cfg.hbar2_over_2m0;
    return {std::sqrt(cfg.m_in * e / h), std::sqrt(cfg.m_out * std::max(cfg.barrier_v0 - e, 0.0) / h)};
}

// tan(k_in t/2) - rhs; increases monotonically on the first branch.
double mismatch(const WellConfig& cfg, double e) {
    const auto k = wave_numbers(cfg, e);
    return std::tan(0.5 * k.k_in * cfg.thickness_t) -
           std::sqrt(cfg.m_in / cfg.m_out * (cfg.barrier_v0 - e) / e);
}

double normalised_residual(const WellConfig& cfg, const WaveNumbers& k) {
    const double theta = 0.5 * k.k_in * cfg.thickness_t;
    const double in = k.k_in / cfg.m_in;
    const double out = k.k_out / cfg.m_out;
    return std::abs(in * std::sin(theta) - out * std::cos(theta)) / (in + out);
}

void check(const WellConfig& cfg) {
    if (!(cfg.thickness_t > 0.0) || !(cfg.barrier_v0 > 0.0) || !(cfg.m_in > 0.0) ||
        !(cfg.m_out > 0.0) || !(cfg.hbar2_over_2m0 > 0.0) || !std::isfinite(cfg.thickness_t) ||
        !std::isfinite(cfg.barrier_v0)) {
        throw DomainError("well configuration needs positive thickness, barrier and masses");
    }
}

}  // namespace

WellSolution ground_state(const WellConfig& cfg) {
    check(cfg);

    // Energy at which k_in t/2 reaches pi/2, the end of the first tan branch.
    const double branch_ceiling =
        cfg.hbar2_over_2m0 * std::pow(std::numbers::pi / cfg.thickness_t, 2) / cfg.m_in;
    double hi = std::min(cfg.barrier_v0 - std::min(kEdgeOffset, 0.5 * cfg.barrier_v0),
                         branch_ceiling * (1.0 - 1e-15));
    double lo = std::min(kEdgeOffset, 0.5 * hi);
    // Very wide wells put the root below the default offset.
    for (int i = 0; i < 40 && mismatch(cfg, lo) >= 0.0; ++i) lo *= 1e-3;

    if (!(mismatch(cfg, lo) < 0.0) || !(mismatch(cfg, hi) > 0.0)) {
        std::ostringstream os;
        os << "ground_state: no sign change in [" << lo << ", " << hi << "] eV for t="
           << cfg.thickness_t << " nm, V0=" << cfg.barrier_v0 << " eV, m_in=" << cfg.m_in
           << ", m_out=" << cfg.m_out;
        throw SolverError(os.str());
    }

    int it = 0;
    for (; it < kMaxBisections; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (mismatch(cfg, mid) < 0.0) lo = mid;
        else hi = mid;
    }
    if (it == kMaxBisections) {
        std::ostringstream os;
        os << "ground_state: bisection did not converge, bracket [" << lo << ", " << hi << "] eV";
        throw SolverError(os.str());
    }

    WellSolution sol;
    sol.energy_eq = 0.5 * (lo + hi);
    const auto k = wave_numbers(cfg, sol.energy_eq);
    sol.k_in = k.k_in;
    sol.k_out = k.k_out;
    sol.residual = normalised_residual(cfg, k);
    sol.bracket_lo = lo;
    sol.bracket_hi = hi;
    sol.iterations = it;
    return sol;
}

double infinite_well_reference(double thickness_t, double m_in, double hbar2_over_2m0) {
    if (!(thickness_t > 0.0) || !(m_in > 0.0)) {
        throw DomainError("infinite well needs positive thickness and mass");
    }
    return std::numbers::pi * std::numbers::pi * hbar2_over_2m0 / (m_in * thickness_t * thickness_t);
}

WellConfig well_config(ValleyKind valley, const MaterialParams& params, double thickness_t) {
    const ValleyMass& m = params.masses(valley);
    return {thickness_t, params.band.v0_offset_111, m.m_in, m.m_out,
            params.constants.hbar2_over_2m0};
}

std::vector<ThicknessEnergy> eq_vs_thickness(ValleyKind valley, const MaterialParams& params,
                                             std::span<const double> t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > 0.0) || (i > 0 && !(t_grid[i] > t_grid[i - 1]))) {
            throw DomainError("thickness grid must be positive and strictly ascending");
        }
    }
    std::vector<ThicknessEnergy> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        out.push_back({t, ground_state(well_config(valley, params, t)).energy_eq});
    }
    return out;
}

}  // namespace strainvalley
