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
#include "wspe/io.hpp"
#include "wspe/synthesis.hpp"
#include "wspe/verify.hpp"

using namespace wspe;
using wspe::testing::make_fig1;
using wspe::testing::make_gn;

namespace {

Outcome sym(const GameGraph &g, const std::string &name) {
    for (size_t k = 0; k < g.outcome_names.size(); ++k)
        if (g.outcome_names[k] == name) return Outcome::symbol(static_cast<int>(k));
    FAIL("unknown outcome ", name);
    return Outcome{};
}

// Two-player zero-sum mean-payoff game with bottom 2-cycles of values 1 and
// 2. Player p0 can force the value-2 cycle from u; w belongs to p1 and walks
// to the value-1 cycle.
GameGraph antagonistic_game() {
    GameDesc d;
    d.spec = SpecKind::MeanPayoff;
    d.players = {"p0", "p1"};
    auto w = [](int a) { return std::vector<Rational>{Rational(a), Rational(-a)}; };
    d.vertices = {{"u", "p0", std::nullopt, {}},   {"w", "p1", std::nullopt, {}},
                  {"c1a", "p0", std::nullopt, {}}, {"c1b", "p1", std::nullopt, {}},
                  {"c2a", "p0", std::nullopt, {}}, {"c2b", "p1", std::nullopt, {}}};
    d.edges = {{"u", "c2a", w(0)},  {"u", "w", w(0)},    {"w", "c1a", w(0)},
               {"w", "u", w(0)},    {"c1a", "c1b", w(1)}, {"c1b", "c1a", w(1)},
               {"c2a", "c2b", w(2)}, {"c2b", "c2a", w(2)}};
    return build_game(d);
}

} // namespace

TEST_CASE("uniform_profile_for_scc base cases") {
    GameGraph g = make_gn(4);
    SUBCASE("a leaf component stays put") {
        Vertex l2 = *g.vertex_by_name("l2");
        auto sol = uniform_profile_for_scc(g, {l2});
        CHECK(sol.outcome == sym(g, "o2"));
        CHECK(sol.cycle == std::vector<Vertex>{l2});
        CHECK(sol.moves[l2] == l2);
    }
    SUBCASE("a mean-payoff 2-cycle averages its weights") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "p", std::nullopt, {}}};
        d.edges = {{"a", "b", {Rational(1)}}, {"b", "a", {Rational(3)}}};
        GameGraph g2 = build_game(d);
        auto sol = uniform_profile_for_scc(g2, {0, 1});
        CHECK(sol.outcome == Outcome::vec({Rational(2)}));
        CHECK(sol.moves[0] == 1);
        CHECK(sol.moves[1] == 0);
    }
    SUBCASE("a cycle override changes the realized outcome") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "p", std::nullopt, {}}};
        d.edges = {{"a", "a", {Rational(5)}}, {"a", "b", {Rational(0)}},
                   {"b", "a", {Rational(0)}}};
        GameGraph g2 = build_game(d);
        auto small = uniform_profile_for_scc(g2, {0, 1});
        CHECK(small.cycle == std::vector<Vertex>{0}); // the self-loop is shortest
        CHECK(small.outcome == Outcome::vec({Rational(5)}));
        auto big = uniform_profile_for_scc(g2, {0, 1}, Lasso{{}, {0, 1}});
        CHECK(big.outcome == Outcome::vec({Rational(0)}));
    }
}

TEST_CASE("uniform_profile_same_outcome") {
    SUBCASE("two bottom cycles with equal averages verify from every start") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"top", "p", std::nullopt, {}}, {"a", "p", std::nullopt, {}},
                      {"b", "p", std::nullopt, {}},   {"c", "p", std::nullopt, {}}};
        d.edges = {{"top", "a", {Rational(0)}}, {"top", "c", {Rational(0)}},
                   {"a", "b", {Rational(1)}},   {"b", "a", {Rational(3)}},
                   {"c", "c", {Rational(2)}}};
        GameGraph g = build_game(d);
        MooreProfile p = uniform_profile_same_outcome(g, {{1, 2}, {3}});
        CHECK(p.is_uniform(g));
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            CHECK(check_very_weak_spe(g, p, v).ok());
            CHECK(outcome_of_lasso(g, induced_lasso(g, p, start_state(p, v))) ==
                  Outcome::vec({Rational(2)}));
        }
    }
    SUBCASE("a graph that is one cycle follows itself") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "p", std::nullopt, {}}};
        d.edges = {{"a", "b", {Rational(1)}}, {"b", "a", {Rational(1)}}};
        GameGraph g = build_game(d);
        MooreProfile p = uniform_profile_same_outcome(g, {{0, 1}});
        CHECK(p.machines[0].next_move[0][0] == 1);
        CHECK(p.machines[0].next_move[0][1] == 0);
    }
    SUBCASE("cycles with different outcomes are rejected") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "p", std::nullopt, {}}};
        d.edges = {{"a", "a", {Rational(1)}}, {"a", "b", {Rational(0)}},
                   {"b", "b", {Rational(2)}}, {"b", "a", {Rational(0)}}};
        GameGraph g = build_game(d);
        try {
            uniform_profile_same_outcome(g, {{0}, {1}});
            FAIL("expected OutcomeMismatch");
        } catch (const GameError &e) {
            CHECK(e.code() == ErrorCode::OutcomeMismatch);
        }
    }
}

TEST_CASE("collapse_to_leafed") {
    SUBCASE("the ring game collapses to itself") {
        GameGraph g = make_gn(4);
        auto lc = collapse_to_leafed(g);
        CHECK(lc.identity);
        CHECK(lc.collapsed == g);
    }
    SUBCASE("a strongly connected game becomes all leaves") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "p", std::nullopt, {}}};
        d.edges = {{"a", "b", {Rational(1)}}, {"b", "a", {Rational(3)}}};
        GameGraph g = build_game(d);
        auto lc = collapse_to_leafed(g);
        CHECK_FALSE(lc.identity);
        for (Vertex v = 0; v < 2; ++v) {
            CHECK(lc.collapsed.leaf[v]);
            CHECK(*lc.collapsed.leaf_value[v] == Outcome::vec({Rational(2)}));
        }
    }
    SUBCASE("a top component feeding a bottom 2-cycle") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"t0", "p", std::nullopt, {}}, {"t1", "p", std::nullopt, {}},
                      {"a", "p", std::nullopt, {}},  {"b", "p", std::nullopt, {}}};
        d.edges = {{"t0", "t1", {Rational(0)}}, {"t1", "t0", {Rational(0)}},
                   {"t1", "a", {Rational(0)}},  {"a", "b", {Rational(1)}},
                   {"b", "a", {Rational(2)}}};
        GameGraph g = build_game(d);
        auto lc = collapse_to_leafed(g);
        CHECK_FALSE(lc.identity);
        CHECK_FALSE(lc.collapsed.leaf[0]);
        CHECK(lc.collapsed.leaf[2]);
        CHECK(lc.collapsed.leaf[3]);
        CHECK(*lc.collapsed.leaf_value[2] == Outcome::vec({Rational(3, 2)}));
        CHECK(*lc.collapsed.leaf_value[3] == Outcome::vec({Rational(3, 2)}));
        // composed pipeline verifies on the original game
        auto fx = run_fixpoint(lc.collapsed);
        auto outer = weak_spe_from_labeling(lc.collapsed, fx.info, fx.labeling);
        auto composed = compose_profiles(g, lc, outer);
        CHECK(check_very_weak_spe(g, composed, 0).ok());
    }
}

TEST_CASE("weak_spe_from_labeling on the ring game with the depicted initial outcome") {
    GameGraph g = make_gn(4);
    auto fx = run_fixpoint(g);
    auto profile = weak_spe_from_labeling(g, fx.info, fx.labeling, sym(g, "o1"));
    Vertex v1 = *g.vertex_by_name("v1"), v2 = *g.vertex_by_name("v2"),
           l1 = *g.vertex_by_name("l1"), l4 = *g.vertex_by_name("l4");
    // root: v1 stops at l1
    ProductState root = start_state(profile, v1);
    Lasso play = induced_lasso(g, profile, root);
    CHECK(play.prefix == std::vector<Vertex>{v1});
    CHECK(play.cycle == std::vector<Vertex>{l1});
    // after the deviation v1 -> v2, the plan runs v2 v3 v4 l4
    ProductState dev = advance(g, profile, root, v2);
    Lasso continuation = induced_lasso(g, profile, dev);
    CHECK(continuation.prefix == std::vector<Vertex>{v2, *g.vertex_by_name("v3"),
                                                     *g.vertex_by_name("v4")});
    CHECK(continuation.cycle == std::vector<Vertex>{l4});
    // each machine has |O_L| + 1 states
    CHECK(profile.max_states() == 5);
    CHECK(check_very_weak_spe(g, profile, v1).ok());
}

TEST_CASE("weak_spe_from_labeling walks to the single leaf") {
    GameDesc d;
    d.spec = SpecKind::Leaf;
    d.players = {"p", "q"};
    d.outcomes = {"o"};
    d.prefer = {{"o"}, {"o"}};
    d.vertices = {{"a", "p", std::nullopt, {}}, {"b", "q", std::nullopt, {}},
                  {"l", "p", "o", {}}};
    d.edges = {{"a", "b", {}}, {"b", "l", {}}, {"b", "a", {}}, {"l", "l", {}}};
    GameGraph g = build_game(d);
    auto fx = run_fixpoint(g);
    auto profile = weak_spe_from_labeling(g, fx.info, fx.labeling);
    Lasso play = induced_lasso(g, profile, start_state(profile, 0));
    CHECK(play.cycle == std::vector<Vertex>{2});
    CHECK(check_very_weak_spe(g, profile, 0).ok());
}

TEST_CASE("state-o plays stay inside the o-labeled region") {
    GameGraph g = make_gn(4);
    auto fx = run_fixpoint(g);
    auto profile = weak_spe_from_labeling(g, fx.info, fx.labeling);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (int o : fx.labeling.label[v]) {
            ProductState s{v, std::vector<int>(g.num_players(), o)};
            Lasso play = induced_lasso(g, profile, s);
            for (Vertex u : play.prefix) CHECK(fx.labeling.contains(u, o));
            for (Vertex u : play.cycle) CHECK(fx.labeling.contains(u, o));
            CHECK(outcome_of_lasso(g, play) == fx.info.outcomes[o]);
        }
    }
}

TEST_CASE("constructed profiles certify on random leafed games") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 60; ++trial) {
        GameGraph g = wspe::testing::random_leafed_game(rng, 8, 4, 4, 5);
        auto fx = run_fixpoint(g);
        auto profile = weak_spe_from_labeling(g, fx.info, fx.labeling);
        for (Vertex v0 = 0; v0 < g.num_vertices(); ++v0)
            CHECK(check_very_weak_spe(g, profile, v0).ok());
    }
}

TEST_CASE("compose_profiles") {
    SUBCASE("identity collapse returns the outer profile unchanged") {
        GameGraph g = make_gn(4);
        auto lc = collapse_to_leafed(g);
        auto fx = run_fixpoint(lc.collapsed);
        auto outer = weak_spe_from_labeling(lc.collapsed, fx.info, fx.labeling);
        CHECK(compose_profiles(g, lc, outer) == outer);
    }
    SUBCASE("the no-SPE example solves to the depicted profile with outcome o3") {
        GameGraph g = make_fig1();
        Vertex v0 = *g.vertex_by_name("v0"), v1 = *g.vertex_by_name("v1"),
               v3 = *g.vertex_by_name("v3");
        auto profile = solve_weak_spe(g, v0);
        ProductState root = start_state(profile, v0);
        CHECK(prescribed_move(g, profile, root) == v1);
        Lasso play = induced_lasso(g, profile, root);
        CHECK(outcome_of_lasso(g, play) == sym(g, "o3"));
        CHECK(play.cycle == std::vector<Vertex>{v3});
        CHECK(check_very_weak_spe(g, profile, v0).ok());
    }
}

TEST_CASE("solve_weak_spe") {
    SUBCASE("ring games of every size certify") {
        for (int n = 3; n <= 8; ++n) {
            GameGraph g = make_gn(n);
            Vertex v1 = *g.vertex_by_name("v1");
            auto profile = solve_weak_spe(g, v1);
            CHECK(check_very_weak_spe(g, profile, v1).ok());
            CHECK(profile.max_states() == n + 1);
        }
    }
    SUBCASE("a start inside a bottom component gets the uniform profile") {
        GameGraph g = make_gn(4);
        Vertex l3 = *g.vertex_by_name("l3");
        auto profile = solve_weak_spe(g, l3);
        CHECK(profile.max_states() == 1);
        CHECK(check_very_weak_spe(g, profile, l3).ok());
    }
}

TEST_CASE("solve_weak_spe handles every outcome specification") {
    std::mt19937 rng(73);
    SUBCASE("parity games") {
        for (int trial = 0; trial < 60; ++trial) {
            GameGraph g = wspe::testing::random_parity_game(rng);
            auto profile = solve_weak_spe(g, 0);
            CHECK(check_very_weak_spe(g, profile, 0).ok());
        }
    }
    SUBCASE("limsup games") {
        for (int trial = 0; trial < 60; ++trial) {
            GameGraph g = wspe::testing::random_mean_payoff_game(rng);
            g.spec = SpecKind::Limsup;
            auto profile = solve_weak_spe(g, 0);
            CHECK(check_very_weak_spe(g, profile, 0).ok());
        }
    }
    SUBCASE("a single self-loop vertex") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p"};
        d.vertices = {{"v", "p", std::nullopt, {}}};
        d.edges = {{"v", "v", {Rational(3)}}};
        GameGraph g = build_game(d);
        CHECK(check_very_weak_spe(g, solve_weak_spe(g, 0), 0).ok());
        CHECK(check_very_weak_spe(g, uniform_weak_spe_layered(g), 0).ok());
    }
    SUBCASE("a leaf-spec game whose bottom cycle carries an override") {
        GameDesc d;
        d.spec = SpecKind::Leaf;
        d.players = {"p", "q"};
        d.outcomes = {"lo", "hi"};
        d.prefer = {{"lo", "hi"}, {"hi", "lo"}};
        d.vertices = {{"t", "p", std::nullopt, {}}, {"a", "q", std::nullopt, {}},
                      {"b", "p", std::nullopt, {}}, {"l", "p", "lo", {}}};
        d.edges = {{"t", "a", {}}, {"t", "l", {}}, {"a", "b", {}}, {"b", "a", {}},
                   {"l", "l", {}}};
        d.cycles = {{{"a", "b"}, "hi"}};
        GameGraph g = build_game(d);
        auto lc = collapse_to_leafed(g);
        CHECK_FALSE(lc.identity); // the a/b cycle collapses via its override
        CHECK(*lc.collapsed.leaf_value[1] == sym(g, "hi"));
        auto profile = solve_weak_spe(g, 0);
        CHECK(check_very_weak_spe(g, profile, 0).ok());
        // player p prefers hi and owns t, so it enters the cycle
        CHECK(prescribed_move(g, profile, start_state(profile, 0)) == 1);
    }
}

TEST_CASE("check_layered finds the ring game's bad pattern") {
    for (int n = 3; n <= 6; ++n) {
        GameGraph g = make_gn(n);
        auto sccs = compute_sccs(g);
        std::vector<Outcome> outcomes;
        for (int c : sccs.bottom_ids())
            outcomes.push_back(uniform_profile_for_scc(g, sccs.components[c]).outcome);
        auto result = check_layered(g, outcomes);
        REQUIRE(std::holds_alternative<BadPattern>(result));
        const auto &w = std::get<BadPattern>(result);
        // the witness satisfies o <_i p <_i q and q <_i' o <_i' p
        CHECK(prefers(g.prefs, w.i, w.o, w.p));
        CHECK(prefers(g.prefs, w.i, w.p, w.q));
        CHECK(prefers(g.prefs, w.i2, w.q, w.o));
        CHECK(prefers(g.prefs, w.i2, w.o, w.p));
    }
    SUBCASE("the lexicographically first witness is pinned for n = 4") {
        GameGraph g = make_gn(4);
        auto sccs = compute_sccs(g);
        std::vector<Outcome> outcomes;
        for (int c : sccs.bottom_ids())
            outcomes.push_back(uniform_profile_for_scc(g, sccs.components[c]).outcome);
        auto result = check_layered(g, outcomes);
        REQUIRE(std::holds_alternative<BadPattern>(result));
        const auto &w = std::get<BadPattern>(result);
        CHECK(w.i == 0);
        CHECK(w.i2 == 3);
        CHECK(w.o == sym(g, "o1"));
        CHECK(w.p == sym(g, "o2"));
        CHECK(w.q == sym(g, "o3"));
    }
}

TEST_CASE("check_layered partitions") {
    SUBCASE("a single player is always layered") {
        GameDesc d;
        d.spec = SpecKind::Leaf;
        d.players = {"p"};
        d.outcomes = {"a", "b", "c"};
        d.prefer = {{"b", "a", "c"}};
        d.vertices = {{"la", "p", "a", {}}, {"lb", "p", "b", {}}, {"lc", "p", "c", {}}};
        d.edges = {{"la", "la", {}}, {"lb", "lb", {}}, {"lc", "lc", {}}};
        GameGraph g = build_game(d);
        auto result = check_layered(
            g, {Outcome::symbol(0), Outcome::symbol(1), Outcome::symbol(2)});
        REQUIRE(std::holds_alternative<LayerPartition>(result));
        CHECK(std::get<LayerPartition>(result).blocks.size() == 1);
    }
    SUBCASE("players sharing one order form a single block") {
        GameDesc d;
        d.spec = SpecKind::Leaf;
        d.players = {"p", "q"};
        d.outcomes = {"a", "b"};
        d.prefer = {{"a", "b"}, {"a", "b"}};
        d.vertices = {{"la", "p", "a", {}}, {"lb", "q", "b", {}}};
        d.edges = {{"la", "la", {}}, {"lb", "lb", {}}};
        GameGraph g = build_game(d);
        auto result = check_layered(g, {Outcome::symbol(0), Outcome::symbol(1)});
        REQUIRE(std::holds_alternative<LayerPartition>(result));
        const auto &p = std::get<LayerPartition>(result);
        REQUIRE(p.blocks.size() == 1);
        CHECK(p.blocks[0].size() == 2);
        CHECK_FALSE(p.reversed[0][1]);
    }
    SUBCASE("opposed orders form one block with a reversed player") {
        GameDesc d;
        d.spec = SpecKind::Leaf;
        d.players = {"p", "q"};
        d.outcomes = {"a", "b"};
        d.prefer = {{"a", "b"}, {"b", "a"}};
        d.vertices = {{"la", "p", "a", {}}, {"lb", "q", "b", {}}};
        d.edges = {{"la", "la", {}}, {"lb", "lb", {}}};
        GameGraph g = build_game(d);
        auto result = check_layered(g, {Outcome::symbol(0), Outcome::symbol(1)});
        REQUIRE(std::holds_alternative<LayerPartition>(result));
        const auto &p = std::get<LayerPartition>(result);
        REQUIRE(p.blocks.size() == 1);
        CHECK(p.reversed[0][1]);
    }
    SUBCASE("unanimous dominance splits blocks") {
        GameDesc d;
        d.spec = SpecKind::Leaf;
        d.players = {"p", "q"};
        d.outcomes = {"a", "b", "c"};
        // both put c on top; a and b are opposed inside the lower block
        d.prefer = {{"a", "b", "c"}, {"b", "a", "c"}};
        d.vertices = {{"la", "p", "a", {}}, {"lb", "q", "b", {}}, {"lc", "p", "c", {}}};
        d.edges = {{"la", "la", {}}, {"lb", "lb", {}}, {"lc", "lc", {}}};
        GameGraph g = build_game(d);
        auto result = check_layered(
            g, {Outcome::symbol(0), Outcome::symbol(1), Outcome::symbol(2)});
        REQUIRE(std::holds_alternative<LayerPartition>(result));
        const auto &p = std::get<LayerPartition>(result);
        REQUIRE(p.blocks.size() == 2);
        CHECK(p.blocks[1] == std::vector<Outcome>{Outcome::symbol(2)}); // top layer
        CHECK(p.blocks[0].size() == 2);
        CHECK(p.reversed[0][1]); // q reverses a/b
    }
    SUBCASE("tie conflicts on payoff outcomes yield a degenerate witness") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p", "q"};
        d.vertices = {{"a", "p", std::nullopt, {}}};
        d.edges = {{"a", "a", {Rational(0), Rational(0)}}};
        GameGraph g = build_game(d);
        Outcome x = Outcome::vec({Rational(0), Rational(0)});
        Outcome y = Outcome::vec({Rational(0), Rational(1)});
        auto result = check_layered(g, {x, y});
        REQUIRE(std::holds_alternative<BadPattern>(result));
        const auto &w = std::get<BadPattern>(result);
        CHECK(w.p == w.q); // the tie-conflict marker
    }
}

TEST_CASE("uniform_weak_spe_layered") {
    SUBCASE("a single bottom component reduces to the cycle profile") {
        GameDesc d;
        d.spec = SpecKind::MeanPayoff;
        d.players = {"p", "q"};
        auto w = [](int a) { return std::vector<Rational>{Rational(a), Rational(a)}; };
        d.vertices = {{"t", "q", std::nullopt, {}}, {"a", "p", std::nullopt, {}},
                      {"b", "p", std::nullopt, {}}};
        d.edges = {{"t", "a", w(0)}, {"a", "b", w(1)}, {"b", "a", w(1)}};
        GameGraph g = build_game(d);
        auto profile = uniform_weak_spe_layered(g);
        auto sccs = compute_sccs(g);
        auto sol = uniform_profile_for_scc(g, sccs.components[sccs.component_of[1]]);
        CHECK(profile.machines[0].next_move[0][1] == sol.moves[1]);
        CHECK(profile.machines[0].next_move[0][2] == sol.moves[2]);
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            CHECK(check_very_weak_spe(g, profile, v).ok());
    }
    SUBCASE("the antagonistic game splits along the hand-computed attractor") {
        GameGraph g = antagonistic_game();
        Vertex u = *g.vertex_by_name("u"), w = *g.vertex_by_name("w");
        Vertex c1a = *g.vertex_by_name("c1a"), c2a = *g.vertex_by_name("c2a");
        auto profile = uniform_weak_spe_layered(g);
        CHECK(profile.is_uniform(g));
        // V' = {u, c2a, c2b}: u is attracted by meta-player 1; w is not
        CHECK(profile.machines[g.owner[u]].next_move[0][u] == c2a);
        CHECK(profile.machines[g.owner[w]].next_move[0][w] == c1a);
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            CHECK(check_very_weak_spe(g, profile, v).ok());
        // realized values match the split
        CHECK(outcome_of_lasso(g, induced_lasso(g, profile, start_state(profile, u))) ==
              Outcome::vec({Rational(2), Rational(-2)}));
        CHECK(outcome_of_lasso(g, induced_lasso(g, profile, start_state(profile, w))) ==
              Outcome::vec({Rational(1), Rational(-1)}));
    }
    SUBCASE("shared-order random games verify from every vertex") {
        std::mt19937 rng(61);
        for (int trial = 0; trial < 40; ++trial) {
            GameGraph g = wspe::testing::random_mean_payoff_game(rng, 10, 4, true);
            auto profile = uniform_weak_spe_layered(g);
            CHECK(profile.is_uniform(g));
            for (Vertex v = 0; v < g.num_vertices(); ++v)
                CHECK(check_very_weak_spe(g, profile, v).ok());
        }
    }
    SUBCASE("the ring game is rejected as not layered") {
        GameGraph g = make_gn(4);
        CHECK_THROWS_AS(uniform_weak_spe_layered(g), NotLayeredError);
    }
}
