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

#include "opd/simplex_analysis.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "opd/discord.hpp"
#include "opd/errors.hpp"
#include "opd/quantum.hpp"

namespace opd {

namespace {

int matrix_rank(const std::vector<Eigen::VectorXd>& vecs, int dim) {
    if (vecs.empty()) return 0;
    Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(vecs.size()));
    for (std::size_t i = 0; i < vecs.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vecs[i];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

StateVec uniform_correlated(const Theory& ab, const std::vector<StateVec>& rho, const std::vector<StateVec>& tau) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(ab->dim);
    for (std::size_t i = 0; i < rho.size(); ++i) c += compose(rho[i], tau[i]).coords;
    return StateVec(ab, c / static_cast<double>(rho.size()));
}

std::string join_indices(const std::vector<int>& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

WitnessReport polytope_witness(const Theory& a, const SearchConfig& config) {
    const Theory ab = compose_theories(a, a);
    const int n = static_cast<int>(a->pure_states.size());
    WitnessReport out;
    std::vector<int> subset(a->dim);
    for (int i = 0; i < a->dim; ++i) subset[i] = i;
    if (n < a->dim) return out;
    do {
        std::vector<Eigen::VectorXd> vecs;
        for (int i : subset) vecs.push_back(a->pure_states[i]);
        if (matrix_rank(vecs, a->dim) < a->dim) continue;
        std::vector<StateVec> states;
        for (int i : subset) states.emplace_back(a, a->pure_states[i]);
        StateVec rho = uniform_correlated(ab, states, states);
        DiscordResult r = discord(rho, config);
        ++out.candidates_checked;
        if (r.value > 1e-9) {
            out.found = true;
            out.state = rho;
            out.discord_lower_bound = r.value;
            out.construction = "uniform sum_i s_i (x) s_i over pure states {" + join_indices(subset) + "}";
            return out;
        }
    } while (next_combination(subset, n));
    out.construction = "no candidate among " + std::to_string(out.candidates_checked) +
                       " linearly independent pure-state sets has positive discord";
    return out;
}

WitnessReport quantum_witness(const Theory& a, const SearchConfig& config) {
    const int d = a->levels();
    const Theory ab = compose_theories(a, a);
    using cd = std::complex<double>;
    auto ket = [&](std::initializer_list<std::pair<int, cd>> amps) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
        for (auto [i, x] : amps) v[i] = x;
        return ket_state(a, v.normalized());
    };

    struct Candidate {
        std::string description;
        StateVec state;
    };
    std::vector<Candidate> pool;
    pool.push_back({"1/2 (|0><0| (x) |0><0| + |+><+| (x) |1><1|)",
                    uniform_correlated(ab, {ket({{0, 1.0}}), ket({{0, 1.0}, {1, 1.0}})},
                                       {ket({{0, 1.0}}), ket({{1, 1.0}})})});
    // Informationally complete set: |k>, |0>+|k>, |0>+i|k>.
    std::vector<StateVec> ic;
    for (int k = 0; k < d; ++k) ic.push_back(ket({{k, 1.0}}));
    for (int k = 1; k < d; ++k) {
        ic.push_back(ket({{0, 1.0}, {k, 1.0}}));
        ic.push_back(ket({{0, 1.0}, {k, cd(0.0, 1.0)}}));
    }
    pool.push_back({"uniform sum_i s_i (x) s_i over |k>, |0>+|k>, |0>+i|k>", uniform_correlated(ab, ic, ic)});

    WitnessReport out;
    for (auto& c : pool) {
        DiscordResult r = discord(c.state, config);
        ++out.candidates_checked;
        if (r.value > config.tol_zero) {
            out.found = true;
            out.state = c.state;
            out.discord_lower_bound = r.value;
            out.construction = c.description;
            return out;
        }
    }
    out.construction = "no candidate in the pool has discord above tol_zero";
    return out;
}

}  // namespace

SimplexReport is_simplicial(const Theory& theory) {
    SimplexReport r;
    r.dim = theory->dim;
    if (theory->is_quantum()) {
        r.affine_rank = theory->dim - 1;
        return r;
    }
    r.pure_count = static_cast<long>(theory->pure_states.size());
    r.affine_rank = matrix_rank(theory->pure_states, theory->dim) - 1;
    r.is_simplex = *r.pure_count == theory->dim && r.affine_rank == theory->dim - 1;
    return r;
}

WitnessReport find_witness(const Theory& theory, const SearchConfig& config) {
    if (theory->is_bipartite()) throw TypeError("find_witness expects a single system");
    return theory->is_quantum() ? quantum_witness(theory, config) : polytope_witness(theory, config);
}

std::vector<Theorem3Row> theorem3_report(const std::vector<Theory>& theories, const SearchConfig& config) {
    std::vector<Theorem3Row> rows;
    for (const auto& t : theories) {
        auto start = std::chrono::steady_clock::now();
        SimplexReport s = is_simplicial(t);
        WitnessReport w = find_witness(t, config);
        auto stop = std::chrono::steady_clock::now();
        Theorem3Row row;
        row.theory = t->name;
        row.dim = s.dim;
        row.pure_count = s.pure_count;
        row.is_simplex = s.is_simplex;
        row.witness_found = w.found;
        row.discord_lower_bound = w.discord_lower_bound;
        row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        row.consistent = s.is_simplex != w.found;
        rows.push_back(row);
    }
    return rows;
}

std::string theorem3_csv(const std::vector<Theorem3Row>& rows, bool zero_runtime) {
    std::ostringstream out;
    out << "theory,dim,pure_count,is_simplex,witness_found,discord_lower_bound,runtime_ms\n";
    char buf[64];
    for (const auto& r : rows) {
        out << r.theory << ',' << r.dim << ',' << (r.pure_count ? std::to_string(*r.pure_count) : "inf") << ','
            << (r.is_simplex ? "true" : "false") << ',' << (r.witness_found ? "true" : "false") << ',';
        std::snprintf(buf, sizeof buf, "%.16e", r.discord_lower_bound);
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.3f", zero_runtime ? 0.0 : r.runtime_ms);
        out << buf << '\n';
    }
    return out.str();
}

}  // namespace opd
