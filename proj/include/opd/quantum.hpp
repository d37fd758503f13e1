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

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "opd/theory.hpp"

namespace opd {

/// Orthonormal Hermitian basis of d x d matrices: identity / sqrt(d), then the
/// symmetric, antisymmetric and diagonal generalized Gell-Mann matrices, each
/// scaled to unit Hilbert-Schmidt norm. Off-diagonal pairs (j, k), j < k, are
/// in lexicographic order.
std::vector<Eigen::MatrixXcd> gell_mann_basis(int d);

Eigen::MatrixXcd to_operator(const TheoryModel& theory, const Eigen::VectorXd& coords);
/// Real coordinates of a Hermitian operator. The anti-Hermitian part is dropped.
Eigen::VectorXd to_coords(const TheoryModel& theory, const Eigen::MatrixXcd& op);

Eigen::MatrixXcd density_matrix(const StateVec& state);
StateVec density_state(const Theory& theory, const Eigen::MatrixXcd& rho);
StateVec ket_state(const Theory& theory, const Eigen::VectorXcd& ket);
EffectVec operator_effect(const Theory& theory, const Eigen::MatrixXcd& op);

struct HermitianEigen {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXcd vectors; // columns
};

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m);
Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd& m);
double trace_norm(const Eigen::MatrixXcd& m);

/// Partial trace of a (da*db) x (da*db) operator.
Eigen::MatrixXcd trace_out_b(const Eigen::MatrixXcd& m, int da, int db);
Eigen::MatrixXcd trace_out_a(const Eigen::MatrixXcd& m, int da, int db);

/// Coordinate matrix of a linear map on operators: M_ab = Re Tr(B_a^out f(B_b^in)).
Eigen::MatrixXd superoperator(const Theory& input, const Theory& output,
                              const std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>& f);

/// The Luders instrument {rho -> P_k rho P_k} for the rank-one projectors onto
/// the columns of the unitary `basis`.
TestModel luders_instrument(const Theory& theory, const Eigen::MatrixXcd& basis);

/// Choi matrix of a coordinate map between quantum systems.
Eigen::MatrixXcd choi_matrix(const Transformation& t);

/// True when the columns are orthonormal to within `tol`.
bool is_orthonormal_basis(const Eigen::MatrixXcd& basis, double tol = 1e-9);

}  // namespace opd
