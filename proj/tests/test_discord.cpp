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

#include <algorithm>

#include "opd/discord.hpp"
#include "opd/errors.hpp"
#include "test_util.hpp"

using namespace opd;
using namespace opd::testing;

namespace {

StateVec correlated(const Theory& t, const std::vector<std::size_t>& idx) {
    Theory tt = compose_theories(t, t);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(tt->dim);
    for (auto i : idx) x += compose(pure_state(t, i), pure_state(t, i)).coords;
    return StateVec(tt, x / static_cast<double>(idx.size()));
}

// Frozen oracle values (tests/oracles).
constexpr double kBellDiscord = 0.5;
constexpr double kWitnessDiscord = 0.25;
constexpr double kGbitAdjacentOppositeFamily = 0.25;

}  // namespace

TEST(MakeNullDiscordState, PerfectlyCorrelatedBits) {
    Theory bit = make_classical(2);
    NullDiscordDecomposition d{{pure_state(bit, 0), pure_state(bit, 1)}, Eigen::Vector2d(0.5, 0.5),
                               {pure_state(bit, 0), pure_state(bit, 1)}};
    EXPECT_EQ(make_null_discord_state(d).coords, Eigen::Vector4d(0.5, 0, 0, 0.5));
}

TEST(MakeNullDiscordState, ClassicalQuantum) {
    Rng rng(1);
    Theory q = qubit();
    NullDiscordDecomposition d{{ket_state(q, ket({1, 0})), ket_state(q, ket({0, 1}))},
                               Eigen::Vector2d(0.5, 0.5),
                               {density_state(q, random_density(2, rng)), density_state(q, random_density(2, rng))}};
    StateVec rho = make_null_discord_state(d);
    EXPECT_TRUE(is_valid_state(rho));
    EXPECT_TRUE(rho.normalized);
}

TEST(MakeNullDiscordState, SingleTermIsProduct) {
    Theory g = make_polygon(4);
    NullDiscordDecomposition d{{pure_state(g, 0)}, Eigen::VectorXd::Ones(1), {pure_state(g, 3)}};
    StateVec rho = make_null_discord_state(d);
    EXPECT_EQ(rho.coords, compose(pure_state(g, 0), pure_state(g, 3)).coords);
    EXPECT_LE(discord(rho).value, 1e-9);
}

TEST(MakeNullDiscordState, NamesFailedInvariant) {
    Theory q = qubit();
    auto expect_message = [](const NullDiscordDecomposition& d, const std::string& needle) {
        try {
            make_null_discord_state(d);
            FAIL() << "expected a domain error";
        } catch (const DomainError& e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    StateVec zero = ket_state(q, ket({1, 0})), one = ket_state(q, ket({0, 1})), plus = ket_state(q, ket({1, 1}));
    expect_message({{zero, one}, Eigen::Vector2d(0.6, 0.6), {zero, one}}, "probability vector");
    expect_message({{zero, plus}, Eigen::Vector2d(0.5, 0.5), {zero, one}}, "not perfectly distinguishable");
    StateVec mixed = density_state(q, Eigen::MatrixXcd::Identity(2, 2) / 2.0);
    expect_message({{mixed}, Eigen::VectorXd::Ones(1), {zero}}, "not pure");
    expect_message({{zero}, Eigen::VectorXd::Ones(1), {StateVec(q, 2 * zero.coords)}}, "not a normalized state");
}

TEST(DistanceToFamily, ZeroOnOwnFamily) {
    Rng rng(2);
    NullDiscordDecomposition d = random_cq_decomposition(2, 2, rng);
    FamilyFit f = distance_to_family(make_null_discord_state(d), d.family);
    EXPECT_LE(f.distance, 1e-9);
}

TEST(DistanceToFamily, UniformClassicalState) {
    Theory bit = make_classical(2), bb = compose_theories(bit, bit);
    StateVec u(bb, Eigen::Vector4d::Constant(0.25));
    FamilyFit f = distance_to_family(u, {pure_state(bit, 0), pure_state(bit, 1)});
    EXPECT_NEAR(f.distance, 0.0, 1e-12);
    EXPECT_TRUE(f.exact);
}

TEST(DistanceToFamily, GbitAdjacentStateOppositeFamily) {
    Theory g = make_polygon(4);
    StateVec rho = correlated(g, {0, 1});
    FamilyFit f = distance_to_family(rho, {pure_state(g, 0), pure_state(g, 2)});
    EXPECT_NEAR(f.distance, kGbitAdjacentOppositeFamily, 1e-9);
    // The optimum is certified by its own decomposition and the dual effect.
    StateVec sigma = make_null_discord_state(f.decomposition);
    EXPECT_NEAR(operational_distance(rho, sigma), f.distance, 1e-9);
    EXPECT_NEAR(evaluate(f.certificate, rho) - evaluate(f.certificate, sigma), f.distance, 1e-9);
    EXPECT_TRUE(is_valid_effect(f.certificate, 1e-8));
}

TEST(DistanceToFamily, InvalidFamilyRejected) {
    Theory g = make_polygon(5);
    StateVec rho = correlated(g, {0, 2});
    EXPECT_THROW(distance_to_family(rho, {pure_state(g, 0), pure_state(g, 1)}), DomainError);
}

TEST(Discord, ProductStatesVanish) {
    // Products with a pure A factor (any theory), and arbitrary products where every
    // state of A is a mixture of one distinguishable family (classical, quantum).
    Rng rng(3);
    for (const Theory& t : {make_classical(3), make_polygon(4), make_polygon(5)}) {
        for (std::size_t i = 0; i < t->pure_states.size(); ++i) {
            StateVec rho = compose(pure_state(t, i), random_state(t, rng));
            EXPECT_LE(discord(rho).value, 1e-9) << t->name;
        }
    }
    for (const Theory& t : {make_classical(3), make_quantum(2)}) {
        for (int i = 0; i < 5; ++i) {
            StateVec rho = compose(random_state(t, rng), random_state(t, rng));
            EXPECT_LE(discord(rho, fast_config()).value, 1e-6) << t->name;
        }
    }
}

TEST(Discord, GbitMixedProductHasDiscord) {
    // (0, 0.6) lies on no edge or diagonal of the square, so it is not a mixture of
    // a distinguishable pair. Oracle: qhull + HiGHS LP.
    Theory g = make_polygon(4);
    StateVec a(g, Eigen::Vector3d(0, 0.6, 1));
    EXPECT_NEAR(discord(compose(a, pure_state(g, 0))).value, 0.15, 1e-9);
}

TEST(Discord, ClassicalStatesVanish) {
    Rng rng(4);
    Theory t = make_classical(3), tt = compose_theories(t, t);
    for (int i = 0; i < 20; ++i) EXPECT_LE(discord(random_state(tt, rng)).value, 1e-9);
}

TEST(Discord, BellState) {
    DiscordResult r = discord(bell_state());
    EXPECT_NEAR(r.value, kBellDiscord, 1e-6);
    EXPECT_FALSE(r.exact);
    EXPECT_TRUE(r.basis.has_value());
    EXPECT_NEAR(operational_distance(bell_state(), make_null_discord_state(r.optimizer)), r.value, 1e-9);
}

TEST(Discord, SeparableWitness) {
    DiscordResult r = discord(separable_witness());
    EXPECT_NEAR(r.value, kWitnessDiscord, 1e-6);
    EXPECT_NEAR(operational_distance(separable_witness(), make_null_discord_state(r.optimizer)), r.value, 1e-9);
}

TEST(Discord, ResultInvariantPolytope) {
    Theory g = make_polygon(5);
    StateVec rho = correlated(g, {0, 1, 2});
    DiscordResult r = discord(rho);
    EXPECT_TRUE(r.exact);
    EXPECT_GT(r.value, 0.0);
    EXPECT_NEAR(operational_distance(rho, make_null_discord_state(r.optimizer)), r.value, 1e-9);
    EXPECT_NEAR(evaluate(r.certificate_effect, rho) - evaluate(r.certificate_effect, make_null_discord_state(r.optimizer)),
                r.value, 1e-9);
}

TEST(Discord, RequiresNormalizedBipartite) {
    EXPECT_THROW(discord(pure_state(make_classical(2), 0)), TypeError);
    Theory bit = make_classical(2), bb = compose_theories(bit, bit);
    EXPECT_THROW(discord(StateVec(bb, Eigen::Vector4d(0.5, 0, 0, 0))), DomainError);
}

TEST(Discord, FamilyEnumerationOverflow) {
    Theory p = make_polygon(9), pp = compose_theories(p, p);
    SearchConfig c;
    c.max_family_checks = 5;
    EXPECT_THROW(discord(compose(pure_state(p, 0), pure_state(p, 0)), c), ResourceError);
}

TEST(Discord, NonnegativeOnRandomStates) {
    Rng rng(6);
    SearchConfig c = fast_config();
    for (const Theory& t : {make_classical(2), make_polygon(4), make_polygon(5)}) {
        Theory tt = compose_theories(t, t);
        for (int i = 0; i < 50; ++i) EXPECT_GE(discord(random_state(tt, rng), c).value, 0.0);
    }
    for (int i = 0; i < 10; ++i) EXPECT_GE(discord(random_state(two_qubits(), rng), c).value, 0.0);
}

TEST(Discord, ZeroOnRandomDecompositions) {
    Rng rng(7);
    for (const Theory& t : {make_classical(3), make_polygon(4), make_polygon(5)}) {
        auto fams = maximal_distinguishable_pure_families(t);
        for (int i = 0; i < 30; ++i) {
            StateVec rho = make_null_discord_state(random_polytope_decomposition(t, t, fams, rng));
            EXPECT_LE(discord(rho).value, 1e-9);
        }
    }
    SearchConfig c = fast_config();
    for (int i = 0; i < 10; ++i) {
        EXPECT_LE(discord(make_null_discord_state(random_cq_decomposition(2, 2, rng)), c).value, 1e-6);
    }
}

TEST(Discord, AsymmetricUnderPartySwap) {
    // Measuring A leaves coherence; the B side of the same state is classical.
    StateVec w = separable_witness();
    double ab = discord(w).value;
    double ba = discord(swap_parties(w)).value;
    EXPECT_NEAR(ba, 0.0, 1e-6);
    EXPECT_GT(ab - ba, 1e-3);
}

TEST(Discord, BSideRelabelingInvariance) {
    Rng rng(8);
    for (int n : {4, 5}) {
        Theory a = make_polygon(n);
        // Rotating B's polygon by one step permutes its vertex labels.
        std::vector<Eigen::VectorXd> rotated(a->pure_states.begin() + 1, a->pure_states.end());
        rotated.push_back(a->pure_states.front());
        Theory b = make_polytope_theory("relabeled" + std::to_string(n), rotated, a->effect_vertices, a->deterministic_effect);
        Theory ab = compose_theories(a, a), ab2 = compose_theories(a, b);
        for (int i = 0; i < 10; ++i) {
            StateVec rho = random_state(ab, rng);
            EXPECT_NEAR(discord(rho).value, discord(StateVec(ab2, rho.coords)).value, 1e-9);
        }
    }
}

TEST(IsNullDiscord, Constructions) {
    Rng rng(9);
    NullDiscordDecomposition d = random_cq_decomposition(2, 2, rng);
    NullDiscordCheck c = is_null_discord(make_null_discord_state(d), 1e-6);
    EXPECT_TRUE(c.null_discord);
    EXPECT_TRUE(c.criteria_agree);
    ASSERT_TRUE(c.decomposition.has_value());
    EXPECT_NO_THROW(validate_decomposition(*c.decomposition));

    Theory g = make_polygon(4);
    auto fams = maximal_distinguishable_pure_families(g);
    NullDiscordCheck p = is_null_discord(make_null_discord_state(random_polytope_decomposition(g, g, fams, rng)), 1e-9);
    EXPECT_TRUE(p.null_discord);
    EXPECT_TRUE(p.decomposition.has_value());
}

TEST(IsNullDiscord, BellState) {
    NullDiscordCheck c = is_null_discord(bell_state(), 1e-6);
    EXPECT_FALSE(c.null_discord);
    EXPECT_FALSE(c.fixed_point_basis.has_value());
    EXPECT_TRUE(c.criteria_agree);
    EXPECT_FALSE(c.decomposition.has_value());
}

TEST(IsNullDiscord, GbitAdjacentCorrelatedState) {
    // Adjacent square vertices are themselves a perfectly distinguishable family,
    // so this correlated state is of null-discord form (oracle: LP value 0).
    StateVec rho = correlated(make_polygon(4), {0, 1});
    NullDiscordCheck c = is_null_discord(rho, 1e-9);
    EXPECT_TRUE(c.null_discord);
    EXPECT_NEAR(c.discord_value, 0.0, 1e-9);
}

TEST(IsNullDiscord, PentagonCorrelatedStateIsNot) {
    StateVec rho = correlated(make_polygon(5), {0, 1, 2});
    NullDiscordCheck c = is_null_discord(rho, 1e-9);
    EXPECT_FALSE(c.null_discord);
    EXPECT_NEAR(c.discord_value, 0.1273220036761685, 1e-9);
}

TEST(IsNullDiscord, AgreesWithFixedPointSearch) {
    Rng rng(16);
    for (int i = 0; i < 50; ++i) {
        StateVec rho = make_null_discord_state(random_cq_decomposition(2, 2, rng));
        NullDiscordCheck c = is_null_discord(rho, 1e-6);
        EXPECT_TRUE(c.null_discord);
        EXPECT_TRUE(c.fixed_point_basis.has_value());
        EXPECT_TRUE(c.criteria_agree);
    }
    for (int i = 0; i < 50; ++i) {
        StateVec rho = density_state(two_qubits(), random_density(4, rng));
        NullDiscordCheck c = is_null_discord(rho, 1e-6);
        EXPECT_FALSE(c.null_discord);
        EXPECT_FALSE(c.fixed_point_basis.has_value());
        EXPECT_TRUE(c.criteria_agree);
    }
}

TEST(Discord, PolytopeLpBracketedByGridOracle) {
    // Grid oracle: minimum over family-decomposable states with weights on a 1/16
    // (gbit) or 1/8 (pentagon) simplex grid. The grid can only overshoot the optimum.
    struct Case {
        int n;
        std::vector<std::size_t> idx;
        double grid;
    };
    for (const Case& c : {Case{4, {0, 1, 2}, 0.1875}, Case{5, {0, 1, 2}, 0.17506775507279224}}) {
        double lp = discord(correlated(make_polygon(c.n), c.idx)).value;
        EXPECT_LE(lp, c.grid + 1e-12);
        EXPECT_LE(c.grid - lp, 0.05);
    }
}

TEST(FixedPoint, ClassicalQuantumComputationalBasis) {
    Rng rng(10);
    Theory q = qubit();
    NullDiscordDecomposition d{{ket_state(q, ket({1, 0})), ket_state(q, ket({0, 1}))},
                               Eigen::Vector2d(0.3, 0.7),
                               {density_state(q, random_density(2, rng)), density_state(q, random_density(2, rng))}};
    StateVec rho = make_null_discord_state(d);
    EXPECT_TRUE(check_vonneumann_fixed_point(rho, Eigen::MatrixXcd::Identity(2, 2)));
    auto basis = find_fixed_point_basis(rho);
    ASSERT_TRUE(basis.has_value());
    EXPECT_TRUE(check_vonneumann_fixed_point(rho, *basis));
}

TEST(FixedPoint, BellStateOnGrid) {
    StateVec b = bell_state();
    for (int t = 0; t < 20; ++t)
        for (int p = 0; p < 20; ++p)
            EXPECT_FALSE(check_vonneumann_fixed_point(b, qubit_basis(M_PI * t / 19, 2 * M_PI * p / 20)));
    EXPECT_FALSE(find_fixed_point_basis(b).has_value());
}

TEST(FixedPoint, ProductStateEigenbasis) {
    Rng rng(11);
    Eigen::MatrixXcd ra = random_density(2, rng), rb = random_density(2, rng);
    StateVec rho = density_state(two_qubits(), kron(ra, rb));
    EXPECT_TRUE(check_vonneumann_fixed_point(rho, hermitian_eigen(ra).vectors));
}

TEST(FixedPoint, DegenerateMarginal) {
    Rng rng(12);
    Eigen::MatrixXcd sigma = random_density(2, rng);
    StateVec rho = density_state(two_qubits(), kron(Eigen::MatrixXcd::Identity(2, 2) / 2.0, sigma));
    auto basis = find_fixed_point_basis(rho);
    ASSERT_TRUE(basis.has_value());
    EXPECT_TRUE(check_vonneumann_fixed_point(rho, *basis));
}

TEST(FixedPoint, DegenerateMarginalWithDistinctConditionals) {
    // q = (1/2, 1/2) in a rotated basis: the marginal is flat but the
    // B-weighted operators still single out the basis.
    Rng rng(13);
    Theory q = qubit();
    Eigen::MatrixXcd u = haar_unitary(2, rng);
    NullDiscordDecomposition d{{ket_state(q, u.col(0)), ket_state(q, u.col(1))},
                               Eigen::Vector2d(0.5, 0.5),
                               {density_state(q, random_density(2, rng)), density_state(q, random_density(2, rng))}};
    auto basis = find_fixed_point_basis(make_null_discord_state(d));
    ASSERT_TRUE(basis.has_value());
}

TEST(FixedPoint, NonOrthonormalRejected) {
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Ones(2, 2);
    EXPECT_THROW(check_vonneumann_fixed_point(bell_state(), bad), DomainError);
    EXPECT_THROW(find_fixed_point_basis(correlated(make_polygon(4), {0, 1})), UnsupportedBackend);
}

TEST(FixedPoint, QutritClassicalQuantum) {
    Rng rng(14);
    for (int i = 0; i < 3; ++i) {
        NullDiscordDecomposition d = random_cq_decomposition(3, 2, rng);
        auto basis = find_fixed_point_basis(make_null_discord_state(d));
        ASSERT_TRUE(basis.has_value());
    }
}

TEST(SwapParties, Involution) {
    Rng rng(15);
    Theory a = make_polygon(4), b = make_classical(3);
    StateVec rho = compose(random_state(a, rng), random_state(b, rng));
    StateVec swapped = swap_parties(rho);
    EXPECT_EQ(swapped.system->name, "classical3*gbit");
    EXPECT_EQ(swap_parties(swapped).coords, rho.coords);
}
