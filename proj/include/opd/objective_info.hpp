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

#include "opd/discrimination.hpp"
#include "opd/theory.hpp"

namespace opd {

/// Whether a test extracts information from a state without disturbing it.
///
/// Outcomes with zero probability have no conditional state; they are listed
/// in `outcome_probabilities` but skipped everywhere else.
struct ObjectiveInfoReport {
    bool repeatable = false;
    bool nondisturbing = false;
    bool provides = false;  // repeatable && nondisturbing
    bool complete = false;  // provides && every conditional state is pure
    std::vector<double> outcome_probabilities;   // p_i = e . A_i rho, every outcome
    std::vector<std::size_t> occurring_outcomes; // i with p_i > 0
    std::vector<StateVec> conditional_states;    // A_i rho / p_i, occurring outcomes only
    std::vector<EffectVec> induced_effects;      // a_i = e . A_i, every outcome
};

/// A_i A_j == delta_ij A_i entrywise within `tol`.
bool is_repeatable(const TestModel& test, double tol = 1e-9);

/// (sum_i A_i) rho == rho in coordinates within `tol`.
bool is_nondisturbing(const TestModel& test, const StateVec& state, double tol = 1e-9);

/// Builds the report and re-checks the two consequences of objective
/// information whenever it holds: the induced effects discriminate the
/// conditional states (delta_ij within 1e-8) and the conditional states
/// average back to rho (within 1e-9). Throws ConsistencyError if either fails.
ObjectiveInfoReport objective_info_report(const TestModel& test, const StateVec& state, double tol = 1e-9);

/// Measure-and-prepare test {rho -> (a_k . rho) psi_k} built from a
/// distinguishable family and its discriminating effects. It is repeatable by
/// construction.
TestModel measure_prepare_test(const PureFamily& family);

/// {A_i (x) I_B} for a test on A.
TestModel extend_with_identity(const TestModel& test, const Theory& b);

}  // namespace opd
