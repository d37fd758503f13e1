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

#include "opd/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opd/errors.hpp"
#include "opd/nelder_mead.hpp"
#include "opd/quantum.hpp"
#include "opd/search.hpp"

namespace opd {

namespace {

struct Dims {
    int da, db;
};

Dims require_quantum_pair(const StateVec& s) {
    const TheoryModel& m = *s.system;
    if (!m.is_quantum()) throw UnsupportedBackend("entropic discord needs the quantum backend");
    if (!m.is_bipartite()) throw TypeError("entropic discord needs a bipartite state");
    return {m.factor_a->levels(), m.factor_b->levels()};
}

double j_of(const Eigen::MatrixXcd& rho, int da, int db, double s_b, const Eigen::MatrixXcd& basis) {
    double j = s_b;
    for (int k = 0; k < da; ++k) {
        Eigen::VectorXcd ket = basis.col(k);
        // <k|_A rho |k>_A, an unnormalized state of B.
        Eigen::MatrixXcd cond = Eigen::MatrixXcd::Zero(db, db);
        for (int i = 0; i < da; ++i)
            for (int l = 0; l < da; ++l)
                cond += std::conj(ket[i]) * ket[l] * rho.block(i * db, l * db, db, db);
        double p = cond.trace().real();
        if (p > 1e-15) j -= p * von_neumann_entropy(cond / p);
    }
    return j;
}

}  // namespace

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
    double s = 0.0;
    for (double v : hermitian_eigenvalues(rho)) {
        if (v >= 1e-12) s -= v * std::log2(v);
    }
    return s;
}

double mutual_information(const StateVec& rho_ab) {
    Dims d = require_quantum_pair(rho_ab);
    Eigen::MatrixXcd m = density_matrix(rho_ab);
    return von_neumann_entropy(trace_out_b(m, d.da, d.db)) + von_neumann_entropy(trace_out_a(m, d.da, d.db)) -
           von_neumann_entropy(m);
}

double conditional_J(const StateVec& rho_ab, const Eigen::MatrixXcd& basis) {
    Dims d = require_quantum_pair(rho_ab);
    if (basis.rows() != d.da || !is_orthonormal_basis(basis)) {
        throw DomainError("conditional_J: basis is not an orthonormal basis of system A");
    }
    Eigen::MatrixXcd m = density_matrix(rho_ab);
    return j_of(m, d.da, d.db, von_neumann_entropy(trace_out_a(m, d.da, d.db)), basis);
}

EntropyReport quantum_discord_entropy(const StateVec& rho_ab, const SearchConfig& config) {
    Dims d = require_quantum_pair(rho_ab);
    const Eigen::MatrixXcd m = density_matrix(rho_ab);
    EntropyReport r;
    r.S_A = von_neumann_entropy(trace_out_b(m, d.da, d.db));
    r.S_B = von_neumann_entropy(trace_out_a(m, d.da, d.db));
    r.S_AB = von_neumann_entropy(m);
    r.mutual_information = r.S_A + r.S_B - r.S_AB;

    std::vector<Eigen::MatrixXcd> candidates;
    candidates.push_back(hermitian_eigen(trace_out_b(m, d.da, d.db)).vectors);
    for (auto& u : measurement_bases(d.da, config)) candidates.push_back(std::move(u));

    std::vector<double> score(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) score[i] = -j_of(m, d.da, d.db, r.S_B, candidates[i]);
    r.evaluations = static_cast<long>(candidates.size());

    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return score[x] < score[y]; });
    const std::size_t refine_count = std::min<std::size_t>(std::max(config.restarts, 1), order.size());

    double best = 0.0;
    bool have = false;
    for (std::size_t k = 0; k < refine_count; ++k) {
        const std::size_t idx = order[k];
        Eigen::MatrixXcd basis = candidates[idx];
        double value = score[idx];
        bool converged = true;
        if (config.refine_iters > 0) {
            BasisChart chart(basis);
            auto f = [&](const Eigen::VectorXd& x) { return -j_of(m, d.da, d.db, r.S_B, chart.at(x)); };
            NelderMeadResult nm = nelder_mead(f, chart.origin(), chart.step(), config.refine_iters, 1e-12);
            r.evaluations += nm.evaluations;
            converged = nm.converged;
            if (nm.value < value) {
                value = nm.value;
                basis = chart.at(nm.x);
            }
        }
        if (!have || value < best - 1e-12) {
            have = true;
            best = value;
            r.optimal_measurement = basis;
            r.converged = converged;
        }
    }
    r.J_value = -best;
    r.discord_value = r.mutual_information - r.J_value;
    if (r.discord_value < 0.0 && r.discord_value >= -1e-6) r.discord_value = 0.0;
    return r;
}

}  // namespace opd
