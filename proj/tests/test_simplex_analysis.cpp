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

#include <gtest/gtest.h>

#include "opd/simplex_analysis.hpp"
#include "test_util.hpp"

using namespace opd;
using namespace opd::testing;

TEST(Simplicial, ClassicalTheories) {
    for (int n = 1; n <= 6; ++n) {
        SimplexReport r = is_simplicial(make_classical(n));
        EXPECT_TRUE(r.is_simplex) << n;
        EXPECT_EQ(*r.pure_count, n);
        EXPECT_EQ(r.affine_rank, n - 1);
    }
}

TEST(Simplicial, Polygons) {
    EXPECT_FALSE(is_simplicial(make_polygon(4)).is_simplex);
    EXPECT_EQ(is_simplicial(make_polygon(4)).affine_rank, 2);
    EXPECT_TRUE(is_simplicial(make_polygon(3)).is_simplex);
    EXPECT_FALSE(is_simplicial(make_polygon(5)).is_simplex);
}

TEST(Simplicial, QuantumHasInfinitelyManyPureStates) {
    SimplexReport r = is_simplicial(qubit());
    EXPECT_FALSE(r.is_simplex);
    EXPECT_FALSE(r.pure_count.has_value());
}

TEST(Simplicial, UniqueDecompositionInSimplex) {
    Rng rng(1);
    Theory t = make_classical(4);
    Eigen::MatrixXd v(4, 4);
    for (int i = 0; i < 4; ++i) v.col(i) = t->pure_states[i];
    for (int i = 0; i < 20; ++i) {
        StateVec s = random_state(t, rng);
        Eigen::VectorXd w = v.fullPivLu().solve(s.coords);
        EXPECT_LE((v * w - s.coords).norm(), 1e-9);
        EXPECT_GE(w.minCoeff(), -1e-12);
    }
    EXPECT_EQ(v.fullPivLu().rank(), 4);
}

TEST(Witness, ClassicalBitHasNone) {
    WitnessReport w = find_witness(make_classical(2));
    EXPECT_FALSE(w.found);
    EXPECT_FALSE(w.state.has_value());
}

TEST(Witness, Gbit) {
    WitnessReport w = find_witness(make_polygon(4));
    ASSERT_TRUE(w.found);
    EXPECT_NEAR(w.discord_lower_bound, 1.0 / 6.0, 1e-9);
    ASSERT_TRUE(w.state.has_value());
    EXPECT_TRUE(is_valid_state(*w.state));
}

TEST(Witness, Pentagon) {
    WitnessReport w = find_witness(make_polygon(5));
    ASSERT_TRUE(w.found);
    EXPECT_NEAR(w.discord_lower_bound, 0.1273220036761685, 1e-9);
}

TEST(Witness, Qubit) {
    WitnessReport w = find_witness(qubit());
    ASSERT_TRUE(w.found);
    EXPECT_NEAR(w.discord_lower_bound, 0.25, 2e-2);
    EXPECT_LT((w.state->coords - separable_witness().coords).norm(), 1e-12);
}

TEST(Witness, ClassicalRandomSeparableStatesHaveNullDiscord) {
    Rng rng(2);
    for (int n : {2, 3, 4}) {
        Theory t = make_classical(n), tt = compose_theories(t, t);
        for (int i = 0; i < 500; ++i) {
            Eigen::VectorXd x = Eigen::VectorXd::Zero(tt->dim);
            Eigen::VectorXd p = random_probability(3, rng);
            for (int k = 0; k < 3; ++k) x += p[k] * compose(random_state(t, rng), random_state(t, rng)).coords;
            EXPECT_LE(discord(StateVec(tt, x)).value, 1e-7);
        }
    }
}

TEST(Theorem3, ClassicalTheories) {
    auto rows = theorem3_report({make_classical(2), make_classical(3), make_classical(4)});
    for (const auto& r : rows) {
        EXPECT_TRUE(r.is_simplex);
        EXPECT_FALSE(r.witness_found);
        EXPECT_TRUE(r.consistent);
    }
}

TEST(Theorem3, NonClassicalTheories) {
    auto rows = theorem3_report({make_polygon(4), make_polygon(5), qubit()});
    for (const auto& r : rows) {
        EXPECT_FALSE(r.is_simplex);
        EXPECT_TRUE(r.witness_found);
        EXPECT_TRUE(r.consistent);
    }
}

TEST(Theorem3, CsvFormat) {
    EXPECT_EQ(theorem3_csv({}), "theory,dim,pure_count,is_simplex,witness_found,discord_lower_bound,runtime_ms\n");
    auto rows = theorem3_report({make_polygon(4), qubit()});
    std::string csv = theorem3_csv(rows, true);
    EXPECT_NE(csv.find("gbit,3,4,false,true,1.6666666666666"), std::string::npos) << csv;
    EXPECT_NE(csv.find("qubit,4,inf,false,true,"), std::string::npos) << csv;
    EXPECT_NE(csv.find(",0.000\n"), std::string::npos);
}
