// Copyright 2026 The wspe Authors
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

#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "wspe/game.hpp"

using namespace wspe;
using wspe::testing::make_fig1;
using wspe::testing::make_gn;
using wspe::testing::pick;

namespace {

GameDesc one_leaf_desc() {
    GameDesc d;
    d.spec = SpecKind::Leaf;
    d.players = {"p"};
    d.outcomes = {"o"};
    d.prefer = {{"o"}};
    d.vertices = {{"l", "p", "o", {}}};
    d.edges = {{"l", "l", {}}};
    return d;
}

ErrorCode code_of(const GameDesc &d) {
    try {
        build_game(d);
    } catch (const GameError &e) {
        return e.code();
    }
    FAIL("expected a GameError");
    return ErrorCode::SemanticError;
}

} // namespace

TEST_CASE("build_game accepts the no-SPE example game") {
    GameGraph g = make_fig1();
    CHECK(g.num_vertices() == 4);
    CHECK(g.owner[*g.vertex_by_name("v1")] == 1);
    CHECK(g.owner[*g.vertex_by_name("v0")] == 0);
    CHECK(g.leaf[*g.vertex_by_name("v2")]);
    CHECK(g.leaf[*g.vertex_by_name("v3")]);
    CHECK_FALSE(g.leaf[*g.vertex_by_name("v0")]);
}

TEST_CASE("build_game accepts a single self-loop leaf game") {
    GameGraph g = build_game(one_leaf_desc());
    CHECK(g.num_vertices() == 1);
    CHECK(g.leaf[0]);
}

TEST_CASE("build_game rejects a vertex without successors") {
    auto d = one_leaf_desc();
    d.vertices.push_back({"sink", "p", std::nullopt, {}});
    CHECK(code_of(d) == ErrorCode::SinkVertex);
}

TEST_CASE("build_game rejects structural errors") {
    SUBCASE("dangling edge") {
        auto d = one_leaf_desc();
        d.edges.push_back({"l", "ghost", {}});
        CHECK(code_of(d) == ErrorCode::DanglingEdge);
    }
    SUBCASE("leaf outcome on a vertex with extra edges") {
        auto d = one_leaf_desc();
        d.vertices.push_back({"u", "p", "o", {}});
        d.edges.push_back({"u", "l", {}});
        CHECK(code_of(d) == ErrorCode::LeafWithExtraEdge);
    }
    SUBCASE("leaf without an outcome") {
        auto d = one_leaf_desc();
        d.vertices.push_back({"m", "p", std::nullopt, {}});
        d.edges.push_back({"m", "m", {}});
        CHECK(code_of(d) == ErrorCode::MissingLeafOutcome);
    }
    SUBCASE("preference order repeating an outcome") {
        auto d = one_leaf_desc();
        d.outcomes = {"o", "o2"};
        d.prefer = {{"o", "o"}};
        CHECK(code_of(d) == ErrorCode::NonPermutationPreference);
    }
    SUBCASE("preference order missing an outcome") {
        auto d = one_leaf_desc();
        d.outcomes = {"o", "o2"};
        d.prefer = {{"o"}};
        CHECK(code_of(d) == ErrorCode::NonPermutationPreference);
    }
    SUBCASE("duplicate edge") {
        auto d = one_leaf_desc();
        d.edges.push_back({"l", "l", {}});
        CHECK(code_of(d) == ErrorCode::SemanticError);
    }
}

TEST_CASE("prefers matches the example game's orders") {
    GameGraph g = make_fig1();
    Outcome o1 = Outcome::symbol(0), o2 = Outcome::symbol(1), o3 = Outcome::symbol(2);
    CHECK(prefers(g.prefs, 0, o1, o2)); // o1 <_1 o2
    CHECK(prefers(g.prefs, 0, o2, o3));
    CHECK(prefers(g.prefs, 1, o3, o1)); // o3 <_2 o1
    CHECK_FALSE(prefers(g.prefs, 0, o2, o2));
    CHECK_FALSE(prefers(g.prefs, 1, o1, o2));
}

TEST_CASE("prefers on payoff vectors compares one exact component") {
    PreferenceTable payoff_prefs;
    Outcome a = Outcome::vec({Rational(1, 3), Rational(5)});
    Outcome b = Outcome::vec({Rational(2, 6), Rational(7)});
    CHECK_FALSE(prefers(payoff_prefs, 0, a, b)); // 1/3 == 2/6 exactly
    CHECK(prefers(payoff_prefs, 1, a, b));
    CHECK_THROWS_AS(prefers(payoff_prefs, 0, a, Outcome::symbol(0)), GameError);
}

TEST_CASE("symbolic preferences form strict total orders") {
    // asymmetry + totality + transitivity by exhaustive triple enumeration
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int no = 2 + pick(rng, 7); // up to 8 outcomes
        PreferenceTable prefs;
        prefs.rank.resize(2);
        for (auto &rank : prefs.rank) {
            rank.resize(no);
            for (int o = 0; o < no; ++o) rank[o] = o;
            for (int o = no - 1; o > 0; --o) std::swap(rank[o], rank[pick(rng, o + 1)]);
        }
        for (PlayerId i = 0; i < 2; ++i)
            for (int a = 0; a < no; ++a)
                for (int b = 0; b < no; ++b) {
                    bool ab = prefers(prefs, i, Outcome::symbol(a), Outcome::symbol(b));
                    bool ba = prefers(prefs, i, Outcome::symbol(b), Outcome::symbol(a));
                    CHECK_FALSE((ab && ba));
                    if (a != b) CHECK((ab || ba));
                    for (int c = 0; c < no; ++c) {
                        bool bc = prefers(prefs, i, Outcome::symbol(b), Outcome::symbol(c));
                        bool ac = prefers(prefs, i, Outcome::symbol(a), Outcome::symbol(c));
                        if (ab && bc) CHECK(ac);
                    }
                }
    }
}

TEST_CASE("outcome_of_lasso on the example game") {
    GameGraph g = make_fig1();
    Vertex v0 = *g.vertex_by_name("v0"), v1 = *g.vertex_by_name("v1"),
           v3 = *g.vertex_by_name("v3");
    CHECK(outcome_of_lasso(g, Lasso{{v0, v1}, {v3}}) == Outcome::symbol(2)); // o3
    // the declared cycle override, in both rotations
    CHECK(outcome_of_lasso(g, Lasso{{}, {v0, v1}}) == Outcome::symbol(0)); // o1
    CHECK(outcome_of_lasso(g, Lasso{{v0}, {v1, v0}}) == Outcome::symbol(0));
    CHECK_THROWS_AS(outcome_of_lasso(g, Lasso{{}, {v1, v0, v1, v0}}), GameError); // not primitive
}

TEST_CASE("outcome_of_lasso raises UndefinedOutcome without an override") {
    GameDesc d;
    d.spec = SpecKind::Leaf;
    d.players = {"p"};
    d.outcomes = {"o"};
    d.prefer = {{"o"}};
    d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "p", std::nullopt, {}}, {"l", "p", "o", {}}};
    d.edges = {{"a", "b", {}}, {"b", "a", {}}, {"a", "l", {}}, {"l", "l", {}}};
    GameGraph g = build_game(d);
    try {
        outcome_of_lasso(g, Lasso{{}, {0, 1}});
        FAIL("expected UndefinedOutcome");
    } catch (const GameError &e) {
        CHECK(e.code() == ErrorCode::UndefinedOutcome);
    }
}

TEST_CASE("mean-payoff outcomes are exact cycle averages") {
    GameDesc d;
    d.spec = SpecKind::MeanPayoff;
    d.players = {"p"};
    d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "p", std::nullopt, {}},
                  {"c", "p", std::nullopt, {}}};
    d.edges = {{"a", "b", {Rational(1)}}, {"b", "a", {Rational(2)}}, {"c", "c", {Rational(5)}},
               {"a", "c", {Rational(0)}}};
    GameGraph g = build_game(d);
    SUBCASE("single edge cycle") {
        CHECK(outcome_of_lasso(g, Lasso{{}, {2}}) == Outcome::vec({Rational(5)}));
    }
    SUBCASE("two-edge cycle averages to 3/2 exactly") {
        Outcome o = outcome_of_lasso(g, Lasso{{}, {0, 1}});
        CHECK(o == Outcome::vec({Rational(3, 2)}));
        // oracle: unroll the cycle ten times and average the walked weights
        Rational sum(0);
        int edges = 0;
        std::vector<Vertex> walk;
        for (int k = 0; k < 10; ++k) {
            walk.push_back(0);
            walk.push_back(1);
        }
        walk.push_back(0);
        for (size_t k = 0; k + 1 < walk.size(); ++k) {
            int slot = g.edge_index(walk[k], walk[k + 1]) - g.edge_offset[walk[k]];
            sum += g.weights[walk[k]][slot][0];
            ++edges;
        }
        CHECK(o.payoff[0] == sum / Rational(edges));
    }
}

TEST_CASE("limsup outcome is the maximal cycle weight per player") {
    GameDesc d;
    d.spec = SpecKind::Limsup;
    d.players = {"p", "q"};
    d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "q", std::nullopt, {}}};
    d.edges = {{"a", "b", {Rational(1), Rational(-3)}}, {"b", "a", {Rational(-1), Rational(2)}}};
    GameGraph g = build_game(d);
    CHECK(outcome_of_lasso(g, Lasso{{}, {0, 1}}) == Outcome::vec({Rational(1), Rational(2)}));
}

TEST_CASE("parity outcome conventions are pinned") {
    GameDesc d;
    d.spec = SpecKind::Parity;
    d.players = {"p"};
    d.vertices = {{"a", "p", std::nullopt, {1}}, {"b", "p", std::nullopt, {2}}};
    d.edges = {{"a", "b", {}}, {"b", "a", {}}};
    SUBCASE("default: minimal priority on the cycle, even wins") {
        GameGraph g = build_game(d);
        CHECK(outcome_of_lasso(g, Lasso{{}, {0, 1}}) == Outcome::vec({Rational(0)}));
    }
    SUBCASE("max convention") {
        d.parity_max = true;
        GameGraph g = build_game(d);
        CHECK(outcome_of_lasso(g, Lasso{{}, {0, 1}}) == Outcome::vec({Rational(1)}));
    }
    SUBCASE("odd convention") {
        d.parity_odd = true;
        GameGraph g = build_game(d);
        CHECK(outcome_of_lasso(g, Lasso{{}, {0, 1}}) == Outcome::vec({Rational(1)}));
    }
}

TEST_CASE("outcome_of_lasso is prefix-independent and rotation-invariant") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        GameGraph g = wspe::testing::random_mean_payoff_game(rng, 8, 3);
        // random walk until a vertex repeats: prefix + cycle
        Vertex v = 0;
        std::vector<Vertex> walk{v};
        std::vector<int> seen(g.num_vertices(), -1);
        seen[v] = 0;
        while (true) {
            v = g.succ[v][pick(rng, static_cast<int>(g.succ[v].size()))];
            if (seen[v] >= 0) break;
            seen[v] = static_cast<int>(walk.size());
            walk.push_back(v);
        }
        std::vector<Vertex> cycle(walk.begin() + seen[v], walk.end());
        std::vector<Vertex> prefix(walk.begin(), walk.begin() + seen[v]);
        Outcome with_prefix = outcome_of_lasso(g, Lasso{prefix, cycle});
        Outcome bare = outcome_of_lasso(g, Lasso{{}, cycle});
        CHECK(with_prefix == bare);
        if (cycle.size() > 1) {
            std::vector<Vertex> rotated(cycle.begin() + 1, cycle.end());
            rotated.push_back(cycle.front());
            if (primitive_cycle(rotated) == rotated)
                CHECK(outcome_of_lasso(g, Lasso{{}, rotated}) == bare);
        }
        // repetition collapses to the primitive root
        std::vector<Vertex> doubled = cycle;
        doubled.insert(doubled.end(), cycle.begin(), cycle.end());
        CHECK(primitive_cycle(doubled) == cycle);
    }
}
