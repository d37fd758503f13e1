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

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "opd/config.hpp"
#include "opd/discrimination.hpp"
#include "opd/theory.hpp"

namespace opd {

/// rho = sum_k q_k psi_k (x) sigma_k with {psi_k} pure and jointly perfectly
/// distinguishable on A.
struct NullDiscordDecomposition {
    std::vector<StateVec> family;
    Eigen::VectorXd weights;
    std::vector<StateVec> conditionals;
};

struct DiscordResult {
    double value = 0.0;
    NullDiscordDecomposition optimizer;
    /// Optimal discrimination effect between rho and the optimizer. On the
    /// polytope backend it also certifies the bound over the whole winning family.
    EffectVec certificate_effect;
    long outer_evaluations = 0;
    bool converged = false;
    /// Polytope values are exact minima; quantum values are upper bounds.
    bool exact = false;
    std::size_t family_index = 0;
    std::optional<Eigen::MatrixXcd> basis;
};

/// Best null-discord approximation of rho within one family.
struct FamilyFit {
    double distance = 0.0;
    NullDiscordDecomposition decomposition;
    EffectVec certificate;
    bool exact = false;
};

/// Throws DomainError naming the first violated invariant.
void validate_decomposition(const NullDiscordDecomposition& decomp);

StateVec make_null_discord_state(const NullDiscordDecomposition& decomp);

/// Minimizes the operational distance from rho_ab to sum_k q_k psi_k (x) sigma_k
/// over the weights and conditional states, with the family fixed.
///
/// Polytope: one exact linear program. Writing rho - sigma = P - N with P, N in
/// the state cone of AB, the distance is the least achievable e . P, so the LP
/// ranges jointly over sigma and the split. Its multipliers on the coordinate
/// rows form an effect a with a . (rho - sigma') >= distance for every sigma'
/// decomposable over the family.
///
/// Quantum: the Hilbert-Schmidt-closest candidate (the pinching of rho in the
/// family's basis) is refined by block-wise Nelder-Mead on the exact trace
/// distance from several starts. The result is an upper bound.
FamilyFit distance_to_family(const StateVec& rho_ab, const PureFamily& family, const SearchConfig& config = {});
FamilyFit distance_to_family(const StateVec& rho_ab, const std::vector<StateVec>& family,
                             const SearchConfig& config = {});

/// Minimum operational distance from rho_ab to the null-discord states, with
/// the distinguishable family on A.
DiscordResult discord(const StateVec& rho_ab, const SearchConfig& config = {});

struct NullDiscordCheck {
    bool null_discord = false;
    double discord_value = 0.0;
    std::optional<NullDiscordDecomposition> decomposition;
    /// Quantum only: a basis whose pinching leaves rho unchanged.
    std::optional<Eigen::MatrixXcd> fixed_point_basis;
    /// Quantum only: whether the distance test and the fixed-point search agree.
    bool criteria_agree = true;
};

NullDiscordCheck is_null_discord(const StateVec& rho_ab, double tol, const SearchConfig& config = {});

/// sum_k (P_k (x) I) rho (P_k (x) I) for the projectors onto the columns of `basis`.
StateVec pinch(const StateVec& rho_ab, const Eigen::MatrixXcd& basis);

/// Whether the pinching in `basis` leaves rho unchanged (coordinates within `tol`).
bool check_vonneumann_fixed_point(const StateVec& rho_ab, const Eigen::MatrixXcd& basis, double tol = 1e-9);

/// Searches for a basis of A passing check_vonneumann_fixed_point. Candidates,
/// in order: eigenbases of the A marginal and of a generic B-weighted reduced
/// operator, rotations inside their degenerate eigenspaces, then the
/// measurement grid. Absent means none was found within that budget.
std::optional<Eigen::MatrixXcd> find_fixed_point_basis(const StateVec& rho_ab, const SearchConfig& config = {});

/// The same state with the roles of A and B exchanged.
StateVec swap_parties(const StateVec& rho_ab);

}  // namespace opd
