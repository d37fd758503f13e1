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

#include "opd/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "opd/errors.hpp"
#include "opd/lp.hpp"
#include "opd/quantum.hpp"
#include "opd/search.hpp"

namespace opd {

namespace {

constexpr std::size_t kMaxVertexScan = 10000;

void check_pair(const StateVec& rho0, const StateVec& rho1) {
    if (!same_system(*rho0.system, *rho1.system)) throw TypeError("discrimination: states live on different systems");
    if (!rho0.normalized || !rho1.normalized) throw DomainError("discrimination: states must be normalized");
}

DiscriminationResult make_result(double distance, EffectVec effect) {
    distance = std::clamp(distance, 0.0, 1.0);
    return DiscriminationResult{(1.0 - distance) / 2.0, std::move(effect), distance};
}

DiscriminationResult quantum_discrimination(const StateVec& rho0, const StateVec& rho1) {
    HermitianEigen eig = hermitian_eigen(density_matrix(rho0) - density_matrix(rho1));
    const int d = static_cast<int>(eig.values.size());
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        if (eig.values[i] > 1e-11) proj += eig.vectors.col(i) * eig.vectors.col(i).adjoint();
    }
    double distance = 0.5 * eig.values.cwiseAbs().sum();
    return make_result(distance, operator_effect(rho0.system, proj));
}

}  // namespace

DiscriminationResult discrimination_by_vertices(const StateVec& rho0, const StateVec& rho1) {
    check_pair(rho0, rho1);
    const TheoryModel& m = *rho0.system;
    if (m.effect_vertices.empty()) throw UnsupportedBackend("system has no listed effect vertices");
    Eigen::VectorXd delta = rho0.coords - rho1.coords;
    const Eigen::VectorXd* best = nullptr;
    double best_value = -1.0;
    for (const auto& a : m.effect_vertices) {
        double v = a.dot(delta);
        if (best == nullptr || v > best_value + 1e-12) {
            best = &a;
            best_value = v;
        } else if (v >= best_value - 1e-12 &&
                   std::lexicographical_compare(a.data(), a.data() + a.size(), best->data(),
                                                best->data() + best->size())) {
            best = &a;
        }
    }
    return make_result(best_value, EffectVec(rho0.system, *best));
}

DiscriminationResult discrimination_by_lp(const StateVec& rho0, const StateVec& rho1) {
    check_pair(rho0, rho1);
    const TheoryModel& m = *rho0.system;
    if (!m.is_polytope()) throw UnsupportedBackend("LP discrimination needs a polytope system");
    Eigen::VectorXd delta = rho0.coords - rho1.coords;
    lp::LinearProgram prog;
    int a0 = prog.add_variables(m.dim, 0.0, true);
    for (int i = 0; i < m.dim; ++i) prog.set_cost(a0 + i, delta[i]);
    for (const auto& v : m.pure_states) {
        std::vector<lp::LinearProgram::Term> terms;
        for (int i = 0; i < m.dim; ++i)
            if (v[i] != 0.0) terms.emplace_back(a0 + i, v[i]);
        prog.add_constraint(terms, lp::Relation::LessEqual, 1.0);
        prog.add_constraint(std::move(terms), lp::Relation::GreaterEqual, 0.0);
    }
    lp::Solution sol = prog.maximize();
    if (!sol.optimal()) throw ConsistencyError("discrimination LP did not reach an optimum");
    return make_result(sol.objective, EffectVec(rho0.system, sol.x));
}

DiscriminationResult min_error_discrimination(const StateVec& rho0, const StateVec& rho1) {
    check_pair(rho0, rho1);
    const TheoryModel& m = *rho0.system;
    if (m.is_quantum()) return quantum_discrimination(rho0, rho1);
    if (!m.effect_vertices.empty() && m.effect_vertices.size() <= kMaxVertexScan) {
        return discrimination_by_vertices(rho0, rho1);
    }
    return discrimination_by_lp(rho0, rho1);
}

double operational_distance(const StateVec& rho0, const StateVec& rho1) {
    return min_error_discrimination(rho0, rho1).distance;
}

DistinguishabilityCertificate are_perfectly_distinguishable(const std::vector<StateVec>& states) {
    if (states.empty()) throw DomainError("are_perfectly_distinguishable: empty state list");
    const Theory& sys = states.front().system;
    for (const auto& s : states) {
        if (!same_system(*s.system, *sys)) throw TypeError("are_perfectly_distinguishable: mixed systems");
        if (!s.normalized) throw DomainError("are_perfectly_distinguishable: states must be normalized");
    }
    const int m = static_cast<int>(states.size());
    DistinguishabilityCertificate cert;

    if (sys->is_quantum()) {
        std::vector<Eigen::MatrixXcd> rho;
        for (const auto& s : states) rho.push_back(density_matrix(s));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if ((rho[i] * rho[j]).norm() > 1e-9) return cert;
        const int d = sys->levels();
        Eigen::MatrixXcd rest = Eigen::MatrixXcd::Identity(d, d);
        std::vector<Eigen::MatrixXcd> proj;
        for (const auto& r : rho) {
            HermitianEigen eig = hermitian_eigen(r);
            Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
            for (int k = 0; k < d; ++k)
                if (eig.values[k] > 1e-10) p += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
            rest -= p;
            proj.push_back(std::move(p));
        }
        proj.back() += rest;
        cert.distinguishable = true;
        for (const auto& p : proj) cert.discriminating_effects.push_back(operator_effect(sys, p));
        return cert;
    }

    const int dim = sys->dim;
    lp::LinearProgram prog;
    int first = prog.add_variables(m * dim, 0.0, true);
    auto var = [&](int effect, int coord) { return first + effect * dim + coord; };
    for (int k = 0; k < m; ++k) {
        for (const auto& v : sys->pure_states) {
            std::vector<lp::LinearProgram::Term> terms;
            for (int c = 0; c < dim; ++c)
                if (v[c] != 0.0) terms.emplace_back(var(k, c), v[c]);
            prog.add_constraint(std::move(terms), lp::Relation::GreaterEqual, 0.0);
        }
    }
    for (int c = 0; c < dim; ++c) {
        std::vector<lp::LinearProgram::Term> terms;
        for (int k = 0; k < m; ++k) terms.emplace_back(var(k, c), 1.0);
        prog.add_constraint(std::move(terms), lp::Relation::Equal, sys->deterministic_effect[c]);
    }
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            std::vector<lp::LinearProgram::Term> terms;
            for (int c = 0; c < dim; ++c)
                if (states[i].coords[c] != 0.0) terms.emplace_back(var(k, c), states[i].coords[c]);
            prog.add_constraint(std::move(terms), lp::Relation::Equal, i == k ? 1.0 : 0.0);
        }
    }
    lp::Solution sol = prog.minimize();
    if (!sol.optimal()) return cert;
    std::vector<EffectVec> effects;
    for (int k = 0; k < m; ++k) effects.emplace_back(sys, sol.x.segment(first + k * dim, dim));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k)
            if (std::abs(evaluate(effects[k], states[i]) - (i == k ? 1.0 : 0.0)) > 1e-8) return cert;
    cert.distinguishable = true;
    cert.discriminating_effects = std::move(effects);
    return cert;
}

PureFamily family_from_basis(const Theory& theory, const Eigen::MatrixXcd& basis) {
    if (!theory->is_quantum()) throw UnsupportedBackend("family_from_basis needs a quantum system");
    if (basis.rows() != theory->levels() || !is_orthonormal_basis(basis)) {
        throw DomainError("family_from_basis: columns must form an orthonormal basis of the system");
    }
    PureFamily fam;
    for (int k = 0; k < basis.cols(); ++k) {
        Eigen::MatrixXcd p = basis.col(k) * basis.col(k).adjoint();
        fam.states.push_back(density_state(theory, p));
        fam.effects.push_back(operator_effect(theory, p));
    }
    fam.basis = basis;
    return fam;
}

std::vector<PureFamily> maximal_distinguishable_pure_families(const Theory& theory, const SearchConfig& config) {
    if (theory->is_quantum()) {
        std::vector<PureFamily> out;
        for (const auto& u : measurement_bases(theory->levels(), config)) out.push_back(family_from_basis(theory, u));
        return out;
    }

    using Subset = std::vector<std::size_t>;
    const std::size_t n = theory->pure_states.size();
    const int max_size = theory->dim;
    long checks = 0;

    auto states_of = [&](const Subset& s) {
        std::vector<StateVec> st;
        for (auto i : s) st.push_back(pure_state(theory, i));
        return st;
    };

    std::vector<std::vector<std::pair<Subset, std::vector<EffectVec>>>> levels(1);
    for (std::size_t i = 0; i < n; ++i) {
        levels[0].push_back({Subset{i}, {deterministic_effect(theory)}});
    }
    for (int size = 2; size <= max_size; ++size) {
        std::set<Subset> previous;
        for (const auto& [s, e] : levels.back()) previous.insert(s);
        std::vector<std::pair<Subset, std::vector<EffectVec>>> next;
        for (const auto& [s, e] : levels.back()) {
            for (std::size_t j = s.back() + 1; j < n; ++j) {
                Subset cand = s;
                cand.push_back(j);
                // Every subset of a distinguishable set is distinguishable.
                bool closed = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && closed; ++drop) {
                    Subset sub;
                    for (std::size_t t = 0; t < cand.size(); ++t)
                        if (t != drop) sub.push_back(cand[t]);
                    closed = previous.count(sub) > 0;
                }
                if (!closed) continue;
                if (++checks > config.max_family_checks) {
                    throw ResourceError("family enumeration exceeded " + std::to_string(config.max_family_checks) +
                                        " feasibility checks");
                }
                DistinguishabilityCertificate cert = are_perfectly_distinguishable(states_of(cand));
                if (cert.distinguishable) next.push_back({std::move(cand), std::move(cert.discriminating_effects)});
            }
        }
        if (next.empty()) break;
        levels.push_back(std::move(next));
    }

    std::vector<PureFamily> out;
    for (std::size_t lvl = levels.size(); lvl-- > 0;) {
        for (const auto& [s, effects] : levels[lvl]) {
            bool maximal = true;
            if (lvl + 1 < levels.size()) {
                for (const auto& [bigger, unused] : levels[lvl + 1]) {
                    if (std::includes(bigger.begin(), bigger.end(), s.begin(), s.end())) {
                        maximal = false;
                        break;
                    }
                }
            }
            if (!maximal) continue;
            PureFamily fam;
            fam.states = states_of(s);
            fam.effects = effects;
            fam.vertex_indices = s;
            out.push_back(std::move(fam));
        }
    }
    return out;
}

}  // namespace opd
