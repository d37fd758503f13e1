// Copyright 2026 The opdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "opd/config.hpp"
#include "opd/random.hpp"
#include "opd/theory.hpp"

namespace opd {

/// `n` nearly uniform unit vectors (golden-angle spiral).
std::vector<Eigen::Vector3d> fibonacci_sphere(int n);

/// Columns |n>, |-n> for the Bloch direction with polar angle theta and azimuth phi.
Eigen::MatrixXcd qubit_basis(double theta, double phi);
Eigen::MatrixXcd qubit_basis(const Eigen::Vector3d& direction);
/// Polar and azimuthal angle of the first column's Bloch vector.
Eigen::Vector2d bloch_angles(const Eigen::MatrixXcd& qubit_basis);

/// exp(i H) * base, with H the Hermitian matrix whose Gell-Mann coordinates are `params`
/// (d*d - 1 entries, identity component omitted).
Eigen::MatrixXcd rotate_basis(const Eigen::MatrixXcd& base, const Eigen::VectorXd& params);

/// Orthonormal measurement bases used by the outer searches: a Fibonacci sphere
/// of `grid_points` antipodal pairs for d = 2, `unitary_samples` Haar unitaries
/// drawn from `seed` otherwise.
std::vector<Eigen::MatrixXcd> measurement_bases(int d, const SearchConfig& config);

/// Random normalized state: Dirichlet mixture of pure states (polytope) or a
/// Ginibre density matrix (quantum).
StateVec random_state(const Theory& theory, Rng& rng);

/// Local parameterization of orthonormal bases around a starting basis, shared
/// by the Nelder-Mead refinements.
class BasisChart {
   public:
    explicit BasisChart(Eigen::MatrixXcd base);
    int num_params() const;
    Eigen::MatrixXcd at(const Eigen::VectorXd& params) const;
    Eigen::VectorXd origin() const;
    double step() const;

   private:
    Eigen::MatrixXcd base_;
    Eigen::Vector2d angles_;
};

}  // namespace opd
