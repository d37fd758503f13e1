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

#include "opd/objective_info.hpp"

#include <cmath>

#include "opd/errors.hpp"

namespace opd {

namespace {

constexpr double kZeroProbability = 1e-12;

void require_endomorphic(const TestModel& test) {
    if (!same_system(*test.input(), *test.output())) {
        throw TypeError("test must map a system to itself (" + test.input()->name + " -> " + test.output()->name + ")");
    }
}

}  // namespace

bool is_repeatable(const TestModel& test, double tol) {
    require_endomorphic(test);
    for (std::size_t i = 0; i < test.size(); ++i) {
        for (std::size_t j = 0; j < test.size(); ++j) {
            Eigen::MatrixXd prod = test.events[i].matrix * test.events[j].matrix;
            if (i == j) prod -= test.events[i].matrix;
            if (prod.lpNorm<Eigen::Infinity>() > tol) return false;
        }
    }
    return true;
}

bool is_nondisturbing(const TestModel& test, const StateVec& state, double tol) {
    require_endomorphic(test);
    StateVec after = test.total().apply(state);
    return (after.coords - state.coords).lpNorm<Eigen::Infinity>() <= tol;
}

ObjectiveInfoReport objective_info_report(const TestModel& test, const StateVec& state, double tol) {
    if (!state.normalized) throw DomainError("objective_info_report: state must be normalized");
    ObjectiveInfoReport r;
    r.repeatable = is_repeatable(test, tol);
    r.nondisturbing = is_nondisturbing(test, state, tol);
    r.provides = r.repeatable && r.nondisturbing;

    const Theory& out = test.output();
    for (std::size_t i = 0; i < test.size(); ++i) {
        const Transformation& ev = test.events[i];
        r.induced_effects.emplace_back(test.input(), ev.matrix.transpose() * out->deterministic_effect);
        StateVec image = ev.apply(state);
        double p = out->deterministic_effect.dot(image.coords);
        r.outcome_probabilities.push_back(p);
        if (p > kZeroProbability) {
            r.occurring_outcomes.push_back(i);
            r.conditional_states.emplace_back(out, image.coords / p);
        }
    }

    if (r.provides) {
        r.complete = true;
        for (const auto& s : r.conditional_states) {
            try {
                if (!is_pure(s)) r.complete = false;
            } catch (const DomainError&) {
                r.complete = false;
            }
        }

        const std::size_t k = r.occurring_outcomes.size();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
                double v = evaluate(r.induced_effects[r.occurring_outcomes[j]], r.conditional_states[i]);
                if (std::abs(v - (i == j ? 1.0 : 0.0)) > 1e-8) {
                    throw ConsistencyError("objective information: induced effects fail to discriminate the "
                                           "conditional states (outcomes " +
                                           std::to_string(r.occurring_outcomes[i]) + ", " +
                                           std::to_string(r.occurring_outcomes[j]) + ")");
                }
            }
        }
        Eigen::VectorXd sum = Eigen::VectorXd::Zero(state.coords.size());
        for (std::size_t i = 0; i < k; ++i) {
            sum += r.outcome_probabilities[r.occurring_outcomes[i]] * r.conditional_states[i].coords;
        }
        if ((sum - state.coords).lpNorm<Eigen::Infinity>() > 1e-9) {
            throw ConsistencyError("objective information: conditional states do not reconstruct the state");
        }
    }
    return r;
}

TestModel measure_prepare_test(const PureFamily& family) {
    if (family.states.empty() || family.states.size() != family.effects.size()) {
        throw DomainError("measure_prepare_test: family needs one effect per state");
    }
    const Theory& sys = family.states.front().system;
    std::vector<Transformation> events;
    for (std::size_t k = 0; k < family.states.size(); ++k) {
        events.emplace_back(sys, sys, family.states[k].coords * family.effects[k].coords.transpose());
    }
    return TestModel(std::move(events));
}

TestModel extend_with_identity(const TestModel& test, const Theory& b) {
    std::vector<Transformation> events;
    Transformation id = identity_transformation(b);
    for (const auto& ev : test.events) events.push_back(compose(ev, id));
    return TestModel(std::move(events));
}

}  // namespace opd
