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

/** @file elasticity.hpp
 *  @brief Rotations between the (111) film frame and the cubic crystal frame,
 *         rank-4 stiffness rotation, and the biaxial strain state of a
 *         pseudomorphic (111) film.
 *
 *  Frame convention: the columns of a RotationMatrix are the film axes
 *  x', y', z' expressed in crystal coordinates, so a film-frame tensor maps
 *  to the crystal frame as  eps = U eps' U^T  and the stiffness transforms
 *  as  C'_pqrs = U_ap U_bq U_cr U_ds C_abcd.
 */

#ifndef STRAINVALLEY_ELASTICITY_HPP
#define STRAINVALLEY_ELASTICITY_HPP

#include "strainvalley/material_db.hpp"

#include <Eigen/Dense>

#include <array>

namespace strainvalley {

/// Proper orthogonal 3x3 matrix.
class RotationMatrix {
public:
    /// Throws DomainError unless m is orthogonal to 1e-12 with det +1.
    static RotationMatrix from_matrix(const Eigen::Matrix3d& m);

    static RotationMatrix identity() { return RotationMatrix(Eigen::Matrix3d::Identity()); }

    double operator()(int row, int col) const { return m_(row, col); }
    const Eigen::Matrix3d& matrix() const { return m_; }

private:
    explicit RotationMatrix(const Eigen::Matrix3d& m) : m_(m) {}
    Eigen::Matrix3d m_;

    friend RotationMatrix rotation_from_angles(double theta, double phi);
};

/// Polar tilt theta about y followed by azimuth phi about z.
RotationMatrix rotation_from_angles(double theta, double phi);

/// Film frame with z' along [111]; equals rotation_from_angles(acos(1/sqrt 3), pi/4).
RotationMatrix rotation_111();

/// Full 81-component stiffness tensor C_ijkl in GPa.
class StiffnessTensor {
public:
    StiffnessTensor() { data_.fill(0.0); }

    /// Cubic (O_h) tensor from C11, C12, C44.
    static StiffnessTensor cubic(const ElasticConstants& c);

    double operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }
    double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }

    /// Sum of squares of all components; invariant under rotation.
    double squared_norm() const;

private:
    static constexpr std::size_t index(int i, int j, int k, int l) {
        return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l);
    }
    std::array<double, 81> data_;
};

/// C' = rotated cubic tensor, expressed in the frame whose axes are u's columns.
StiffnessTensor rotate_stiffness(const ElasticConstants& c, const RotationMatrix& u);

/// Closed-form perpendicular strain of a (111) film under biaxial eps_par:
///   eps_perp = -(2 C11 + 4 C12 - 4 C44) / (C11 + 2 C12 + 4 C44) * eps_par
double perp_strain(const ElasticConstants& c, double eps_par);

/// eps_perp / eps_par from the stress-free condition on z' evaluated with a
/// rotated stiffness tensor: -(C'_3311 + C'_3322) / C'_3333. Independent of
/// the closed form above.
double perp_strain_ratio_rotated(const ElasticConstants& c, const RotationMatrix& u);

struct StrainState {
    double eps_par = 0.0;
    double eps_perp = 0.0;
    Eigen::Matrix3d tensor_111 = Eigen::Matrix3d::Zero();      // diag(par, par, perp)
    Eigen::Matrix3d tensor_crystal = Eigen::Matrix3d::Zero();  // cubic axes

    double trace() const { return 2.0 * eps_par + eps_perp; }
};

/// Pseudomorphic (111) strain state. The crystal-frame tensor has
/// (2 par + perp)/3 on the diagonal and (perp - par)/3 off it.
StrainState strain_state(const ElasticConstants& c, double eps_par);

}  // namespace strainvalley

#endif
