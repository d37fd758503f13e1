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

#include "opd/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace opd::lp {

namespace {

constexpr double kOptTol = 1e-11;
constexpr double kPivotTol = 1e-11;

// Dense tableau in canonical form with respect to `basis`. Column layout:
// structural columns, then one artificial per row, then the right-hand side.
class Tableau {
   public:
    Tableau(Eigen::MatrixXd a, Eigen::VectorXd b, int structural)
        : t_(a.rows(), a.cols() + 1), basis_(a.rows()), structural_(structural) {
        t_.leftCols(a.cols()) = a;
        t_.col(a.cols()) = b;
        for (int i = 0; i < rows(); ++i) basis_[i] = structural_ + i;
    }

    int rows() const { return static_cast<int>(t_.rows()); }
    int cols() const { return static_cast<int>(t_.cols()) - 1; }
    int rhs_col() const { return cols(); }
    bool is_artificial(int j) const { return j >= structural_; }

    // Reduced costs and objective value for cost vector `c` under the current basis.
    void price(const Eigen::VectorXd& c) {
        reduced_ = c;
        objective_ = 0.0;
        for (int i = 0; i < rows(); ++i) {
            double cb = c[basis_[i]];
            if (cb == 0.0) continue;
            reduced_ -= cb * t_.row(i).head(cols()).transpose();
            objective_ += cb * t_(i, rhs_col());
        }
    }

    void pivot(int r, int j) {
        t_.row(r) /= t_(r, j);
        for (int i = 0; i < rows(); ++i) {
            if (i == r) continue;
            double f = t_(i, j);
            if (f != 0.0) t_.row(i) -= f * t_.row(r);
        }
        double f = reduced_[j];
        if (f != 0.0) {
            reduced_ -= f * t_.row(r).head(cols()).transpose();
            objective_ += f * t_(r, rhs_col());
        }
        basis_[r] = j;
    }

    // Runs simplex iterations. Returns false when unbounded.
    bool iterate(bool allow_artificial_entry) {
        const long max_iters = 50000L + 200L * cols();
        for (long it = 0; it < max_iters; ++it) {
            int enter = -1;
            for (int j = 0; j < cols(); ++j) {
                if (!allow_artificial_entry && is_artificial(j)) continue;
                if (reduced_[j] < -kOptTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < rows(); ++i) {
                double a = t_(i, enter);
                if (a <= kPivotTol) continue;
                double ratio = std::max(0.0, t_(i, rhs_col())) / a;
                if (leave < 0 || ratio < best - 1e-14) {
                    best = ratio;
                    leave = i;
                } else if (ratio <= best + 1e-14 && basis_[i] < basis_[leave]) {
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
        throw std::runtime_error("simplex iteration limit exceeded");
    }

    // After phase one, pivot zero-level artificials out of the basis where possible.
    void expel_artificials() {
        for (int i = 0; i < rows(); ++i) {
            if (!is_artificial(basis_[i])) continue;
            for (int j = 0; j < structural_; ++j) {
                if (std::abs(t_(i, j)) > 1e-9) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    double objective() const { return objective_; }
    const Eigen::VectorXd& reduced() const { return reduced_; }
    const std::vector<int>& basis() const { return basis_; }
    double value(int i) const { return t_(i, rhs_col()); }

   private:
    Eigen::MatrixXd t_;
    std::vector<int> basis_;
    int structural_;
    Eigen::VectorXd reduced_;
    double objective_ = 0.0;
};

}  // namespace

int LinearProgram::add_variable(double cost, bool free) {
    costs_.push_back(cost);
    free_.push_back(free);
    return static_cast<int>(costs_.size()) - 1;
}

int LinearProgram::add_variables(int count, double cost, bool free) {
    int first = num_variables();
    for (int k = 0; k < count; ++k) add_variable(cost, free);
    return first;
}

void LinearProgram::set_cost(int var, double cost) { costs_.at(var) = cost; }

void LinearProgram::add_constraint(std::vector<Term> terms, Relation rel, double rhs) {
    for (const auto& [var, coef] : terms) {
        if (var < 0 || var >= num_variables()) throw std::out_of_range("LP constraint references unknown variable");
        (void)coef;
    }
    rows_.push_back(Row{std::move(terms), rel, rhs});
}

Solution LinearProgram::minimize() const { return solve(false); }

Solution LinearProgram::maximize() const {
    Solution s = solve(true);
    s.objective = -s.objective;
    s.duals = -s.duals;
    return s;
}

Solution LinearProgram::solve(bool negate_costs) const {
    const int m = num_constraints();
    const int nv = num_variables();

    // Column map: user variable -> (plus column, minus column or -1).
    std::vector<int> plus(nv), minus(nv, -1);
    int ncols = 0;
    for (int v = 0; v < nv; ++v) {
        plus[v] = ncols++;
        if (free_[v]) minus[v] = ncols++;
    }
    std::vector<int> slack(m, -1);
    for (int i = 0; i < m; ++i) {
        if (rows_[i].rel != Relation::Equal) slack[i] = ncols++;
    }
    const int structural = ncols;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, structural + m);
    Eigen::VectorXd b(m);
    std::vector<double> sign(m, 1.0);
    for (int i = 0; i < m; ++i) {
        const Row& row = rows_[i];
        for (const auto& [var, coef] : row.terms) {
            a(i, plus[var]) += coef;
            if (minus[var] >= 0) a(i, minus[var]) -= coef;
        }
        if (row.rel == Relation::LessEqual) a(i, slack[i]) = 1.0;
        if (row.rel == Relation::GreaterEqual) a(i, slack[i]) = -1.0;
        b[i] = row.rhs;
        if (b[i] < 0) {
            sign[i] = -1.0;
            a.row(i) *= -1.0;
            b[i] = -b[i];
        }
        a(i, structural + i) = 1.0;
    }

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(structural + m);
    for (int v = 0; v < nv; ++v) {
        double c = negate_costs ? -costs_[v] : costs_[v];
        cost[plus[v]] = c;
        if (minus[v] >= 0) cost[minus[v]] = -c;
    }

    Tableau tab(std::move(a), b, structural);
    Solution out;
    out.x = Eigen::VectorXd::Zero(nv);
    out.duals = Eigen::VectorXd::Zero(m);

    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(structural + m);
    phase1.tail(m).setOnes();
    tab.price(phase1);
    tab.iterate(true);
    double scale = 1.0 + b.lpNorm<Eigen::Infinity>();
    if (tab.objective() > feasibility_tol * scale) {
        out.status = Status::Infeasible;
        return out;
    }
    tab.expel_artificials();

    tab.price(cost);
    if (!tab.iterate(false)) {
        out.status = Status::Unbounded;
        return out;
    }
    out.status = Status::Optimal;
    out.objective = tab.objective();

    Eigen::VectorXd col_value = Eigen::VectorXd::Zero(structural + m);
    for (int i = 0; i < m; ++i) col_value[tab.basis()[i]] = tab.value(i);
    for (int v = 0; v < nv; ++v) {
        out.x[v] = col_value[plus[v]];
        if (minus[v] >= 0) out.x[v] -= col_value[minus[v]];
    }
    // Artificial columns carry cost zero in phase two, so their reduced cost is
    // minus the simplex multiplier of their row.
    for (int i = 0; i < m; ++i) out.duals[i] = -sign[i] * tab.reduced()[structural + i];
    return out;
}

}  // namespace opd::lp
