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
#include "opd/theory.hpp"

namespace opd {

/// Outcome of equal-prior binary discrimination. The optimal test is {a, e - a},
/// guessing the first state on outcome a.
struct DiscriminationResult {
    double p_err = 0.5;
    EffectVec optimal_effect;
    double distance = 0.0;  // 1 - 2 p_err
};

struct DistinguishabilityCertificate {
    bool distinguishable = false;
    /// a_j with a_j . rho_i = delta_ij and sum_j a_j = e; empty when not distinguishable.
    std::vector<EffectVec> discriminating_effects;
};

/// A jointly perfectly distinguishable family of pure states on one system,
/// together with the effects that discriminate it.
struct PureFamily {
    std::vector<StateVec> states;
    std::vector<EffectVec> effects;
    std::vector<std::size_t> vertex_indices;  // polytope backend
    std::optional<Eigen::MatrixXcd> basis;    // quantum backend: columns are the kets
};

/// Minimum-error discrimination of two normalized states with priors 1/2.
///
/// Polytope systems with a listed effect polytope are solved by scanning its
/// vertices (ties go to the lexicographically smallest vertex); other polytope
/// systems by a linear program over the effect set. Quantum systems use the
/// positive eigenspace of rho0 - rho1.
DiscriminationResult min_error_discrimination(const StateVec& rho0, const StateVec& rho1);

/// The polytope routes, exposed separately so they can be cross-checked.
DiscriminationResult discrimination_by_vertices(const StateVec& rho0, const StateVec& rho1);
DiscriminationResult discrimination_by_lp(const StateVec& rho0, const StateVec& rho1);

double operational_distance(const StateVec& rho0, const StateVec& rho1);

DistinguishabilityCertificate are_perfectly_distinguishable(const std::vector<StateVec>& states);

/// Maximal jointly distinguishable families of pure states.
///
/// Polytope: every inclusion-maximal distinguishable subset of the pure-state
/// vertices, largest first. Quantum: one family per measurement basis of the
/// search grid (see measurement_bases).
std::vector<PureFamily> maximal_distinguishable_pure_families(const Theory& theory, const SearchConfig& config = {});

/// The family of rank-one projectors onto the columns of `basis`.
PureFamily family_from_basis(const Theory& theory, const Eigen::MatrixXcd& basis);

}  // namespace opd
