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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace opd {

enum class Backend { Polytope, Quantum };

std::string to_string(Backend backend);

/// A finite-dimensional system of a causal theory.
///
/// States and effects live in a fixed real coordinate space of dimension
/// `dim`, and the probability of effect a on state x is the plain dot product
/// a . x. Polytope systems list their pure states and the vertices of their
/// effect polytope explicitly. Quantum systems use the coordinates of
/// Hermitian operators in an orthonormal operator basis whose first element is
/// identity / sqrt(levels); their pure states are implicit.
///
/// Bipartite systems are tensor products of coordinate spaces and remember
/// their two factors. Instances are shared as `Theory` (pointer to const) and
/// never mutated after construction.
struct TheoryModel {
    std::string name;
    Backend backend = Backend::Polytope;
    int dim = 0;
    std::vector<Eigen::VectorXd> pure_states;
    /// Empty when the effect polytope is only known through its facets (bipartite
    /// polytope systems); discrimination then falls back to linear programming.
    std::vector<Eigen::VectorXd> effect_vertices;
    Eigen::VectorXd deterministic_effect;
    std::optional<int> quantum_levels;

    std::shared_ptr<const TheoryModel> factor_a;
    std::shared_ptr<const TheoryModel> factor_b;

    /// Quantum backend only: `dim` Hermitian matrices of size levels x levels.
    std::vector<Eigen::MatrixXcd> operator_basis;

    bool is_quantum() const { return backend == Backend::Quantum; }
    bool is_polytope() const { return backend == Backend::Polytope; }
    bool is_bipartite() const { return factor_a != nullptr; }
    int levels() const { return quantum_levels.value_or(0); }
};

using Theory = std::shared_ptr<const TheoryModel>;

/// Structural identity: two models describe the same system when name, backend
/// and dimension agree. Composites are rebuilt on demand, so pointer identity
/// is not enough.
bool same_system(const TheoryModel& a, const TheoryModel& b);

Theory make_classical(int n);
Theory make_polygon(int n);
Theory make_quantum(int d);

/// Builds and validates a polytope theory. When `effect_vertices` is empty they
/// are enumerated from the pure states (no-restriction effect set).
Theory make_polytope_theory(std::string name, std::vector<Eigen::VectorXd> pure_states,
                            std::vector<Eigen::VectorXd> effect_vertices, Eigen::VectorXd deterministic_effect);

/// Tensor-product composite AB.
Theory compose_theories(const Theory& a, const Theory& b);

/// Resolves names such as "classical3", "bit", "gbit", "polygon5", "qubit", "quantum3".
Theory builtin_theory(std::string_view name);

/// Checks every structural invariant of the model and throws DomainError naming
/// the first one that fails.
void validate_theory(const TheoryModel& model);

/// Vertices of {a : 0 <= a . v <= 1 for every pure state v}, by enumeration of
/// active constraint sets. Returns an empty list when more than `max_subsets`
/// candidate bases would need to be tried.
std::vector<Eigen::VectorXd> effect_polytope_vertices(const std::vector<Eigen::VectorXd>& pure_states,
                                                      long max_subsets = 2000000);

struct StateVec {
    Theory system;
    Eigen::VectorXd coords;
    bool normalized = false;

    StateVec() = default;
    StateVec(Theory system, Eigen::VectorXd coords);
};

struct EffectVec {
    Theory system;
    Eigen::VectorXd coords;

    EffectVec() = default;
    EffectVec(Theory system, Eigen::VectorXd coords);
};

/// A linear map between state spaces, given in coordinates.
struct Transformation {
    Theory input;
    Theory output;
    Eigen::MatrixXd matrix;

    Transformation() = default;
    Transformation(Theory input, Theory output, Eigen::MatrixXd matrix);

    StateVec apply(const StateVec& state) const;
    Transformation then(const Transformation& next) const;
};

/// An outcome-indexed collection of events with common input and output.
struct TestModel {
    std::vector<Transformation> events;

    TestModel() = default;
    explicit TestModel(std::vector<Transformation> events);

    const Theory& input() const { return events.front().input; }
    const Theory& output() const { return events.front().output; }
    Transformation total() const;
    std::size_t size() const { return events.size(); }
};

enum class Side { A, B };

double evaluate(const EffectVec& effect, const StateVec& state);

StateVec compose(const StateVec& a, const StateVec& b);
EffectVec compose(const EffectVec& a, const EffectVec& b);
Transformation compose(const Transformation& a, const Transformation& b);

/// Applies the deterministic effect of `discard` and returns the state of the other factor.
StateVec marginalize(const StateVec& state, Side discard);

EffectVec deterministic_effect(const Theory& theory);
Transformation identity_transformation(const Theory& theory);

/// Cone membership: polytope states must be non-negative combinations of pure
/// states; quantum states must have a positive semidefinite matrix.
bool is_valid_state(const StateVec& state, double tol = 1e-10);
bool is_valid_effect(const EffectVec& effect, double tol = 1e-10);

bool is_pure(const StateVec& state, double tol = 1e-9);

/// Sub-normalization and cone preservation of a single event.
bool is_valid_transformation(const Transformation& t, double tol = 1e-10);
/// Every event valid and the summed event deterministic.
bool is_valid_test(const TestModel& test, double tol = 1e-10);

/// Pure state number `index` of a polytope theory.
StateVec pure_state(const Theory& theory, std::size_t index);

}  // namespace opd
