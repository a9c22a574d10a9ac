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

#include "strainvalley/elasticity.hpp"

#include "strainvalley/errors.hpp"

#include <cmath>
#include <numbers>

namespace strainvalley {

namespace {

// Voigt index of the symmetric pair (i, j).
constexpr int voigt(int i, int j) {
    if (i == j) return i;
    return 6 - i - j;  // (1,2)->3, (0,2)->4, (0,1)->5
}

}  // namespace

RotationMatrix RotationMatrix::from_matrix(const Eigen::Matrix3d& m) {
    const double ortho = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    if (!(ortho <= 1e-12) || std::abs(m.determinant() - 1.0) > 1e-12) {
        throw DomainError("matrix is not a proper rotation");
    }
    return RotationMatrix(m);
}

RotationMatrix rotation_from_angles(double theta, double phi) {
    const double ct = std::cos(theta), st = std::sin(theta);
    const double cp = std::cos(phi), sp = std::sin(phi);
    Eigen::Matrix3d u;
    u << cp * ct, -sp, cp * st,
         sp * ct,  cp, sp * st,
         -st,     0.0, ct;
    return RotationMatrix(u);
}

RotationMatrix rotation_111() {
    return rotation_from_angles(std::acos(1.0 / std::numbers::sqrt3), std::numbers::pi / 4.0);
}

StiffnessTensor StiffnessTensor::cubic(const ElasticConstants& c) {
    Eigen::Matrix<double, 6, 6> v = Eigen::Matrix<double, 6, 6>::Zero();
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) v(a, b) = (a == b) ? c.c11 : c.c12;
        v(a + 3, a + 3) = c.c44;
    }
    StiffnessTensor t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) t(i, j, k, l) = v(voigt(i, j), voigt(k, l));
    return t;
}

double StiffnessTensor::squared_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return s;
}

StiffnessTensor rotate_stiffness(const ElasticConstants& c, const RotationMatrix& u) {
    const StiffnessTensor src = StiffnessTensor::cubic(c);
    const Eigen::Matrix3d& m = u.matrix();

    // Contract one index at a time: 4 * 3^5 multiplies instead of 3^8.
    StiffnessTensor a, b;
    for (int p = 0; p < 3; ++p)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    double s = 0.0;
                    for (int i = 0; i < 3; ++i) s += m(i, p) * src(i, j, k, l);
                    a(p, j, k, l) = s;
                }
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    double s = 0.0;
                    for (int j = 0; j < 3; ++j) s += m(j, q) * a(p, j, k, l);
                    b(p, q, k, l) = s;
                }
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int r = 0; r < 3; ++r)
                for (int l = 0; l < 3; ++l) {
                    double s = 0.0;
                    for (int k = 0; k < 3; ++k) s += m(k, r) * b(p, q, k, l);
                    a(p, q, r, l) = s;
                }
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int r = 0; r < 3; ++r)
                for (int t = 0; t < 3; ++t) {
                    double s = 0.0;
                    for (int l = 0; l < 3; ++l) s += m(l, t) * a(p, q, r, l);
                    b(p, q, r, t) = s;
                }
    return b;
}

double perp_strain(const ElasticConstants& c, double eps_par) {
    const double den = c.c11 + 2.0 * c.c12 + 4.0 * c.c44;
    if (!(den > 0.0)) throw DomainError("C11 + 2 C12 + 4 C44 must be positive");
    return -(2.0 * c.c11 + 4.0 * c.c12 - 4.0 * c.c44) / den * eps_par;
}

double perp_strain_ratio_rotated(const ElasticConstants& c, const RotationMatrix& u) {
    const StiffnessTensor r = rotate_stiffness(c, u);
    return -(r(2, 2, 0, 0) + r(2, 2, 1, 1)) / r(2, 2, 2, 2);
}

StrainState strain_state(const ElasticConstants& c, double eps_par) {
    StrainState s;
    s.eps_par = eps_par;
    s.eps_perp = perp_strain(c, eps_par);
    s.tensor_111 = Eigen::Vector3d(eps_par, eps_par, s.eps_perp).asDiagonal();

    const double diag = (2.0 * eps_par + s.eps_perp) / 3.0;
    const double off = (s.eps_perp - eps_par) / 3.0;
    s.tensor_crystal.setConstant(off);
    s.tensor_crystal.diagonal().setConstant(diag);
    return s;
}

}  // namespace strainvalley
