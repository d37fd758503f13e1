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

#include <Eigen/Dense>

#include "opd/config.hpp"
#include "opd/theory.hpp"

namespace opd {

// Entropic quantities for a bipartite quantum state, in bits.
struct EntropyReport {
    double S_A = 0.0;
    double S_B = 0.0;
    double S_AB = 0.0;
    double mutual_information = 0.0;
    double J_value = 0.0;        // at optimal_measurement
    double discord_value = 0.0;  // clipped to 0 when within -1e-6 of it
    Eigen::MatrixXcd optimal_measurement;
    long evaluations = 0;
    bool converged = false;
};

// Eigenvalues below 1e-12 contribute nothing.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

double mutual_information(const StateVec& rho_ab);

// J for the rank-one von Neumann measurement whose kets are the columns of basis.
double conditional_J(const StateVec& rho_ab, const Eigen::MatrixXcd& basis);

EntropyReport quantum_discord_entropy(const StateVec& rho_ab, const SearchConfig& config = {});

}  // namespace opd
