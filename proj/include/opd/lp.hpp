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

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace opd::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    double objective = 0.0;
    Eigen::VectorXd x;
    /// One multiplier per constraint, with objective == duals . rhs at the optimum.
    /// For every non-negative variable j the reduced cost c_j - duals . A_j has
    /// the sign required by optimality (>= 0 when minimizing, <= 0 when maximizing).
    Eigen::VectorXd duals;

    bool optimal() const { return status == Status::Optimal; }
};

/// A small dense linear program, solved by a two-phase tableau simplex with
/// Bland's rule so that degenerate problems cannot cycle and every run pivots
/// identically.
class LinearProgram {
   public:
    using Term = std::pair<int, double>;

    int add_variable(double cost = 0.0, bool free = false);
    /// Adds `count` variables sharing cost and sign restriction; returns the first index.
    int add_variables(int count, double cost = 0.0, bool free = false);
    void set_cost(int var, double cost);
    void add_constraint(std::vector<Term> terms, Relation rel, double rhs);

    Solution minimize() const;
    Solution maximize() const;

    int num_variables() const { return static_cast<int>(costs_.size()); }
    int num_constraints() const { return static_cast<int>(rows_.size()); }

    /// Primal feasibility tolerance used for the phase-one test.
    double feasibility_tol = 1e-9;

   private:
    struct Row {
        std::vector<Term> terms;
        Relation rel;
        double rhs;
    };
    Solution solve(bool negate_costs) const;

    std::vector<double> costs_;
    std::vector<bool> free_;
    std::vector<Row> rows_;
};

}  // namespace opd::lp
