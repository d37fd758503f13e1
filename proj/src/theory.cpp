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

#include "opd/theory.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "opd/errors.hpp"
#include "opd/lp.hpp"
#include "opd/quantum.hpp"

namespace opd {

namespace {

Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

// Is x a non-negative combination of the columns listed in `generators`?
// With `convex`, the weights must also sum to one.
bool in_cone(const std::vector<Eigen::VectorXd>& generators, const Eigen::VectorXd& x, bool convex, double tol) {
    lp::LinearProgram prog;
    prog.feasibility_tol = tol;
    int first = prog.add_variables(static_cast<int>(generators.size()));
    for (Eigen::Index r = 0; r < x.size(); ++r) {
        std::vector<lp::LinearProgram::Term> terms;
        for (std::size_t g = 0; g < generators.size(); ++g) {
            if (generators[g][r] != 0.0) terms.emplace_back(first + static_cast<int>(g), generators[g][r]);
        }
        prog.add_constraint(std::move(terms), lp::Relation::Equal, x[r]);
    }
    if (convex) {
        std::vector<lp::LinearProgram::Term> terms;
        for (std::size_t g = 0; g < generators.size(); ++g) terms.emplace_back(first + static_cast<int>(g), 1.0);
        prog.add_constraint(std::move(terms), lp::Relation::Equal, 1.0);
    }
    return prog.minimize().optimal();
}

void require_same(const TheoryModel& a, const TheoryModel& b, const char* what) {
    if (!same_system(a, b)) {
        throw TypeError(std::string(what) + ": system mismatch (" + a.name + " vs " + b.name + ")");
    }
}

}  // namespace

std::string to_string(Backend backend) { return backend == Backend::Quantum ? "quantum" : "polytope"; }

bool same_system(const TheoryModel& a, const TheoryModel& b) {
    if (&a == &b) return true;
    return a.name == b.name && a.backend == b.backend && a.dim == b.dim;
}

std::vector<Eigen::VectorXd> effect_polytope_vertices(const std::vector<Eigen::VectorXd>& pure_states,
                                                      long max_subsets) {
    if (pure_states.empty()) return {};
    const int dim = static_cast<int>(pure_states.front().size());
    const int n = static_cast<int>(pure_states.size());
    if (n < dim) return {};

    // Budget: C(n, dim) * 2^dim linear solves.
    double combos = std::ldexp(1.0, dim);
    for (int k = 0; k < dim; ++k) combos *= static_cast<double>(n - k) / (k + 1);
    if (combos > static_cast<double>(max_subsets)) return {};

    std::vector<Eigen::VectorXd> found;
    auto feasible = [&](const Eigen::VectorXd& a) {
        for (const auto& v : pure_states) {
            double p = a.dot(v);
            if (p < -1e-9 || p > 1 + 1e-9) return false;
        }
        return true;
    };
    auto add = [&](Eigen::VectorXd a) {
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (std::abs(a[i]) < 1e-14) a[i] = 0.0;
        for (const auto& f : found)
            if ((f - a).lpNorm<Eigen::Infinity>() < 1e-9) return;
        found.push_back(std::move(a));
    };

    std::vector<int> idx(dim);
    for (int k = 0; k < dim; ++k) idx[k] = k;
    while (true) {
        Eigen::MatrixXd m(dim, dim);
        for (int k = 0; k < dim; ++k) m.row(k) = pure_states[idx[k]].transpose();
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        lu.setThreshold(1e-10);
        if (lu.isInvertible()) {
            for (unsigned mask = 0; mask < (1u << dim); ++mask) {
                Eigen::VectorXd rhs(dim);
                for (int k = 0; k < dim; ++k) rhs[k] = (mask >> k) & 1u ? 1.0 : 0.0;
                Eigen::VectorXd a = lu.solve(rhs);
                if (feasible(a)) add(std::move(a));
            }
        }
        int k = dim - 1;
        while (k >= 0 && idx[k] == n - dim + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(found.begin(), found.end(), lex_less);
    return found;
}

void validate_theory(const TheoryModel& m) {
    if (m.dim <= 0) throw DomainError("theory " + m.name + ": dimension must be positive");
    if (m.deterministic_effect.size() != m.dim) {
        throw DomainError("theory " + m.name + ": deterministic effect has wrong length");
    }
    if (m.is_quantum()) {
        if (!m.quantum_levels || *m.quantum_levels * *m.quantum_levels != m.dim) {
            throw DomainError("theory " + m.name + ": quantum dim must equal quantum_levels^2");
        }
        return;
    }
    if (m.pure_states.empty()) throw DomainError("theory " + m.name + ": no pure states");
    for (const auto& v : m.pure_states) {
        if (v.size() != m.dim) throw DomainError("theory " + m.name + ": pure state has wrong length");
        if (std::abs(m.deterministic_effect.dot(v) - 1.0) > 1e-12) {
            throw DomainError("theory " + m.name + ": deterministic effect is not 1 on every pure state");
        }
    }
    for (const auto& a : m.effect_vertices) {
        if (a.size() != m.dim) throw DomainError("theory " + m.name + ": effect vertex has wrong length");
        for (const auto& v : m.pure_states) {
            double p = a.dot(v);
            if (p < -1e-10 || p > 1 + 1e-10) {
                throw DomainError("theory " + m.name + ": effect vertex outside [0,1] on a pure state");
            }
        }
    }
    if (!m.is_bipartite()) {
        for (std::size_t i = 0; i < m.pure_states.size(); ++i) {
            std::vector<Eigen::VectorXd> others;
            for (std::size_t j = 0; j < m.pure_states.size(); ++j)
                if (j != i) others.push_back(m.pure_states[j]);
            if (!others.empty() && in_cone(others, m.pure_states[i], true, 1e-10)) {
                throw DomainError("theory " + m.name + ": pure state " + std::to_string(i) +
                                  " is not an extreme point");
            }
        }
    }
}

Theory make_classical(int n) {
    if (n < 1) throw DomainError("invalid dimension: classical system needs n >= 1");
    auto m = std::make_shared<TheoryModel>();
    m->name = "classical" + std::to_string(n);
    m->backend = Backend::Polytope;
    m->dim = n;
    for (int i = 0; i < n; ++i) m->pure_states.push_back(Eigen::VectorXd::Unit(n, i));
    if (n <= 16) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Eigen::VectorXd a(n);
            for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1u ? 1.0 : 0.0;
            m->effect_vertices.push_back(a);
        }
        std::sort(m->effect_vertices.begin(), m->effect_vertices.end(), lex_less);
    }
    m->deterministic_effect = Eigen::VectorXd::Ones(n);
    return m;
}

Theory make_polygon(int n) {
    if (n < 3) throw DomainError("invalid polygon: need n >= 3 sides");
    auto m = std::make_shared<TheoryModel>();
    m->name = n == 4 ? "gbit" : "polygon" + std::to_string(n);
    m->backend = Backend::Polytope;
    m->dim = 3;
    const double pi = std::numbers::pi;
    const double r = 1.0 / std::cos(pi / n);
    for (int k = 0; k < n; ++k) {
        double angle = 2 * pi * k / n + pi / n;
        Eigen::VectorXd v(3);
        v << r * std::cos(angle), r * std::sin(angle), 1.0;
        // Exact zeros and unit magnitudes keep the square's vertices at (+-1, +-1, 1).
        for (int i = 0; i < 2; ++i) {
            double rounded = std::round(v[i]);
            if (std::abs(v[i] - rounded) < 1e-14) v[i] = rounded;
        }
        m->pure_states.push_back(v);
    }
    m->deterministic_effect = Eigen::Vector3d(0, 0, 1);
    m->effect_vertices = effect_polytope_vertices(m->pure_states);
    return m;
}

Theory make_quantum(int d) {
    if (d < 2) throw DomainError("invalid dimension: quantum system needs d >= 2");
    auto m = std::make_shared<TheoryModel>();
    m->name = d == 2 ? "qubit" : "quantum" + std::to_string(d);
    m->backend = Backend::Quantum;
    m->dim = d * d;
    m->quantum_levels = d;
    m->operator_basis = gell_mann_basis(d);
    m->deterministic_effect = Eigen::VectorXd::Zero(m->dim);
    m->deterministic_effect[0] = std::sqrt(static_cast<double>(d));
    return m;
}

Theory make_polytope_theory(std::string name, std::vector<Eigen::VectorXd> pure_states,
                            std::vector<Eigen::VectorXd> effect_vertices, Eigen::VectorXd deterministic_effect) {
    auto m = std::make_shared<TheoryModel>();
    m->name = std::move(name);
    m->backend = Backend::Polytope;
    m->dim = static_cast<int>(deterministic_effect.size());
    m->pure_states = std::move(pure_states);
    m->deterministic_effect = std::move(deterministic_effect);
    if (effect_vertices.empty()) {
        for (const auto& v : m->pure_states) {
            if (v.size() != m->dim) throw DomainError("theory " + m->name + ": pure state has wrong length");
        }
        effect_vertices = effect_polytope_vertices(m->pure_states);
    }
    m->effect_vertices = std::move(effect_vertices);
    validate_theory(*m);
    return m;
}

Theory compose_theories(const Theory& a, const Theory& b) {
    if (a->backend != b->backend) throw TypeError("cannot compose systems from different backends");
    auto m = std::make_shared<TheoryModel>();
    m->name = a->name + "*" + b->name;
    m->backend = a->backend;
    m->dim = a->dim * b->dim;
    m->factor_a = a;
    m->factor_b = b;
    m->deterministic_effect = kron(a->deterministic_effect, b->deterministic_effect);
    if (a->is_quantum()) {
        m->quantum_levels = a->levels() * b->levels();
        m->operator_basis.reserve(static_cast<std::size_t>(m->dim));
        for (const auto& x : a->operator_basis)
            for (const auto& y : b->operator_basis) m->operator_basis.push_back(kron(x, y));
    } else {
        for (const auto& x : a->pure_states)
            for (const auto& y : b->pure_states) m->pure_states.push_back(kron(x, y));
    }
    return m;
}

Theory builtin_theory(std::string_view name) {
    auto suffix = [&](std::string_view prefix) -> std::optional<int> {
        if (!name.starts_with(prefix)) return std::nullopt;
        std::string_view rest = name.substr(prefix.size());
        int value = 0;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
        if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty()) return std::nullopt;
        return value;
    };
    if (name == "bit") return make_classical(2);
    if (name == "trit") return make_classical(3);
    if (name == "gbit") return make_polygon(4);
    if (name == "qubit") return make_quantum(2);
    if (name == "qutrit") return make_quantum(3);
    if (auto n = suffix("classical")) return make_classical(*n);
    if (auto n = suffix("polygon")) return make_polygon(*n);
    if (auto n = suffix("quantum")) return make_quantum(*n);
    throw DomainError("unknown theory name: " + std::string(name));
}

StateVec::StateVec(Theory sys, Eigen::VectorXd c) : system(std::move(sys)), coords(std::move(c)) {
    if (!system) throw TypeError("state without a system");
    if (coords.size() != system->dim) throw TypeError("state coordinates do not match the system dimension");
    normalized = std::abs(system->deterministic_effect.dot(coords) - 1.0) <= 1e-12;
}

EffectVec::EffectVec(Theory sys, Eigen::VectorXd c) : system(std::move(sys)), coords(std::move(c)) {
    if (!system) throw TypeError("effect without a system");
    if (coords.size() != system->dim) throw TypeError("effect coordinates do not match the system dimension");
}

Transformation::Transformation(Theory in, Theory out, Eigen::MatrixXd m)
    : input(std::move(in)), output(std::move(out)), matrix(std::move(m)) {
    if (!input || !output) throw TypeError("transformation without systems");
    if (matrix.rows() != output->dim || matrix.cols() != input->dim) {
        throw TypeError("transformation matrix shape does not match its systems");
    }
}

StateVec Transformation::apply(const StateVec& state) const {
    require_same(*input, *state.system, "apply");
    return StateVec(output, matrix * state.coords);
}

Transformation Transformation::then(const Transformation& next) const {
    require_same(*output, *next.input, "sequential composition");
    return Transformation(input, next.output, next.matrix * matrix);
}

TestModel::TestModel(std::vector<Transformation> ev) : events(std::move(ev)) {
    if (events.empty()) throw DomainError("a test needs at least one event");
    for (const auto& e : events) {
        require_same(*e.input, *events.front().input, "test");
        require_same(*e.output, *events.front().output, "test");
    }
}

Transformation TestModel::total() const {
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(output()->dim, input()->dim);
    for (const auto& e : events) sum += e.matrix;
    return Transformation(input(), output(), std::move(sum));
}

double evaluate(const EffectVec& effect, const StateVec& state) {
    require_same(*effect.system, *state.system, "evaluate");
    return effect.coords.dot(state.coords);
}

StateVec compose(const StateVec& a, const StateVec& b) {
    return StateVec(compose_theories(a.system, b.system), kron(a.coords, b.coords));
}

EffectVec compose(const EffectVec& a, const EffectVec& b) {
    return EffectVec(compose_theories(a.system, b.system), kron(a.coords, b.coords));
}

Transformation compose(const Transformation& a, const Transformation& b) {
    return Transformation(compose_theories(a.input, b.input), compose_theories(a.output, b.output),
                          kron(a.matrix, b.matrix));
}

StateVec marginalize(const StateVec& state, Side discard) {
    const TheoryModel& ab = *state.system;
    if (!ab.is_bipartite()) throw TypeError("marginalize needs a bipartite state");
    const int da = ab.factor_a->dim;
    const int db = ab.factor_b->dim;
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> x(state.coords.data(),
                                                                                               da, db);
    if (discard == Side::B) return StateVec(ab.factor_a, x * ab.factor_b->deterministic_effect);
    return StateVec(ab.factor_b, x.transpose() * ab.factor_a->deterministic_effect);
}

EffectVec deterministic_effect(const Theory& theory) { return EffectVec(theory, theory->deterministic_effect); }

Transformation identity_transformation(const Theory& theory) {
    return Transformation(theory, theory, Eigen::MatrixXd::Identity(theory->dim, theory->dim));
}

bool is_valid_state(const StateVec& state, double tol) {
    const TheoryModel& m = *state.system;
    if (m.is_quantum()) return hermitian_eigenvalues(density_matrix(state)).minCoeff() >= -tol;
    return in_cone(m.pure_states, state.coords, false, std::max(tol, 1e-12));
}

bool is_valid_effect(const EffectVec& effect, double tol) {
    const TheoryModel& m = *effect.system;
    if (m.is_quantum()) {
        Eigen::VectorXd ev = hermitian_eigenvalues(to_operator(m, effect.coords));
        return ev.minCoeff() >= -tol && ev.maxCoeff() <= 1 + tol;
    }
    for (const auto& v : m.pure_states) {
        double p = effect.coords.dot(v);
        if (p < -tol || p > 1 + tol) return false;
    }
    return true;
}

bool is_pure(const StateVec& state, double tol) {
    if (!state.normalized) throw DomainError("is_pure: state is not normalized");
    if (!is_valid_state(state)) throw DomainError("is_pure: coordinates are not a valid state");
    const TheoryModel& m = *state.system;
    if (m.is_quantum()) return state.coords.squaredNorm() >= 1.0 - tol;
    for (const auto& v : m.pure_states) {
        if ((v - state.coords).lpNorm<Eigen::Infinity>() <= tol) return true;
    }
    return false;
}

bool is_valid_transformation(const Transformation& t, double tol) {
    if (t.input->is_quantum()) {
        if (!t.output->is_quantum()) return false;
        if (hermitian_eigenvalues(choi_matrix(t)).minCoeff() < -tol) return false;
        // e_in - T^dagger(e_out) must be a positive operator.
        Eigen::VectorXd slack = t.input->deterministic_effect - t.matrix.transpose() * t.output->deterministic_effect;
        return hermitian_eigenvalues(to_operator(*t.input, slack)).minCoeff() >= -tol;
    }
    for (const auto& v : t.input->pure_states) {
        Eigen::VectorXd image = t.matrix * v;
        if (t.output->deterministic_effect.dot(image) > t.input->deterministic_effect.dot(v) + tol) return false;
        if (!in_cone(t.output->pure_states, image, false, std::max(tol, 1e-12))) return false;
    }
    return true;
}

bool is_valid_test(const TestModel& test, double tol) {
    for (const auto& e : test.events)
        if (!is_valid_transformation(e, tol)) return false;
    Transformation sum = test.total();
    Eigen::VectorXd pulled = sum.matrix.transpose() * sum.output->deterministic_effect;
    return (pulled - sum.input->deterministic_effect).lpNorm<Eigen::Infinity>() <= tol;
}

StateVec pure_state(const Theory& theory, std::size_t index) {
    if (!theory->is_polytope()) throw UnsupportedBackend("quantum pure states are implicit; use ket_state");
    return StateVec(theory, theory->pure_states.at(index));
}

}  // namespace opd
