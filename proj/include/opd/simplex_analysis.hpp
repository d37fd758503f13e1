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
#include <string>
#include <vector>

#include "opd/config.hpp"
#include "opd/theory.hpp"

namespace opd {

struct SimplexReport {
    bool is_simplex = false;
    std::optional<long> pure_count;  // empty: infinitely many pure states
    int dim = 0;
    int affine_rank = 0;
};

SimplexReport is_simplicial(const Theory& theory);

// A separable state sum_i p_i rho_i (x) tau_i with positive discord, with B a copy of A.
struct WitnessReport {
    bool found = false;
    std::optional<StateVec> state;
    double discord_lower_bound = 0.0;  // discord of the reported candidate
    std::string construction;
    long candidates_checked = 0;
};

WitnessReport find_witness(const Theory& theory, const SearchConfig& config = {});

struct Theorem3Row {
    std::string theory;
    int dim = 0;
    std::optional<long> pure_count;
    bool is_simplex = false;
    bool witness_found = false;
    double discord_lower_bound = 0.0;
    double runtime_ms = 0.0;
    // non-simplicial => witness, simplicial => none under budget
    bool consistent = false;
};

std::vector<Theorem3Row> theorem3_report(const std::vector<Theory>& theories, const SearchConfig& config = {});

// Header plus one line per row. With zero_runtime the runtime column is written as 0.
std::string theorem3_csv(const std::vector<Theorem3Row>& rows, bool zero_runtime = false);

}  // namespace opd
