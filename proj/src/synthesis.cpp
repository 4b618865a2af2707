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

#include "wspe/synthesis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace wspe {

namespace {

MooreProfile positional_profile(const GameGraph &game, const std::vector<Vertex> &moves) {
    MooreProfile p;
    for (PlayerId i = 0; i < game.num_players(); ++i)
        p.machines.push_back(MooreMachine::positional(game, i, moves));
    return p;
}

// Per-vertex moves producing the given cycles and reaching their vertex set
// positionally from everywhere inside `within` (BFS, ascending tie-breaks).
// Vertices that cannot reach any cycle keep -1.
std::vector<Vertex> cycle_reach_moves(const GameGraph &game, const std::vector<bool> &within,
                                      const std::vector<std::vector<Vertex>> &cycles) {
    const int nv = game.num_vertices();
    std::vector<Vertex> moves(nv, -1);
    std::vector<int> dist(nv, std::numeric_limits<int>::max());
    std::deque<Vertex> queue;
    for (const auto &cyc : cycles) {
        for (size_t k = 0; k < cyc.size(); ++k)
            moves[cyc[k]] = cyc[(k + 1) % cyc.size()];
        for (Vertex v : cyc) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for (Vertex v : game.pred[w])
            if (within[v] && dist[v] == std::numeric_limits<int>::max()) {
                dist[v] = dist[w] + 1;
                queue.push_back(v);
            }
    }
    for (Vertex v = 0; v < nv; ++v) {
        if (!within[v] || moves[v] >= 0 || dist[v] == std::numeric_limits<int>::max()) continue;
        for (Vertex w : game.succ[v])
            if (within[w] && dist[w] == dist[v] - 1) {
                moves[v] = w;
                break;
            }
    }
    return moves;
}

std::vector<bool> mask_of(const GameGraph &game, const std::vector<Vertex> &vertices) {
    std::vector<bool> mask(game.num_vertices(), false);
    for (Vertex v : vertices) mask[v] = true;
    return mask;
}

} // namespace

ComponentSolution uniform_profile_for_scc(const GameGraph &game,
                                          const std::vector<Vertex> &component,
                                          const std::optional<Lasso> &cycle_override) {
    ComponentSolution sol;
    if (cycle_override) {
        validate_lasso(game, *cycle_override);
        sol.cycle = cycle_override->cycle;
    } else {
        sol.cycle = smallest_simple_cycle(game, component).cycle;
    }
    sol.outcome = outcome_of_lasso(game, Lasso{{}, sol.cycle});
    sol.moves = cycle_reach_moves(game, mask_of(game, component), {sol.cycle});
    sol.profile = positional_profile(game, sol.moves);
    return sol;
}

MooreProfile uniform_profile_same_outcome(const GameGraph &game,
                                          const std::vector<std::vector<Vertex>> &cycles) {
    if (cycles.empty())
        throw GameError(ErrorCode::SemanticError, "no cycles supplied");
    Outcome o = outcome_of_lasso(game, Lasso{{}, cycles[0]});
    for (const auto &cyc : cycles) {
        Outcome oc = outcome_of_lasso(game, Lasso{{}, cyc});
        if (!(oc == o))
            throw GameError(ErrorCode::OutcomeMismatch,
                            "supplied cycles have outcomes " + outcome_to_string(game, o) +
                                " and " + outcome_to_string(game, oc));
    }
    std::vector<bool> all(game.num_vertices(), true);
    auto moves = cycle_reach_moves(game, all, cycles);
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        if (moves[v] < 0)
            throw GameError(ErrorCode::SemanticError,
                            "vertex '" + game.vertex_names[v] + "' cannot reach the supplied cycles");
    return positional_profile(game, moves);
}

LeafCollapse collapse_to_leafed(const GameGraph &game) {
    LeafCollapse lc;
    lc.sccs = compute_sccs(game);
    lc.bottom_comp.assign(game.num_vertices(), -1);
    for (int c : lc.sccs.bottom_ids()) {
        lc.inner.emplace(c, uniform_profile_for_scc(game, lc.sccs.components[c]));
        for (Vertex v : lc.sccs.components[c]) lc.bottom_comp[v] = c;
    }

    GameGraph g2 = game;
    g2.spec = SpecKind::Leaf;
    g2.weights.assign(game.num_vertices(), {});
    g2.priority.assign(game.num_vertices(), {});
    g2.leaf_value.assign(game.num_vertices(), std::nullopt);
    for (Vertex v = 0; v < game.num_vertices(); ++v) {
        if (lc.bottom_comp[v] >= 0) {
            g2.succ[v] = {v};
            g2.leaf_value[v] = lc.inner.at(lc.bottom_comp[v]).outcome;
        }
    }
    g2.edge_offset.assign(game.num_vertices() + 1, 0);
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        g2.edge_offset[v + 1] = g2.edge_offset[v] + static_cast<int>(g2.succ[v].size());
    g2.pred.assign(game.num_vertices(), {});
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        for (Vertex w : g2.succ[v]) g2.pred[w].push_back(v);
    g2.leaf.assign(game.num_vertices(), false);
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        g2.leaf[v] = g2.succ[v].size() == 1 && g2.succ[v][0] == v;
    // Keep symbolic outcome machinery only if the source game had it; keep
    // cycle overrides whose edges survived.
    if (game.spec != SpecKind::Leaf) {
        g2.outcome_names.clear();
        g2.prefs = PreferenceTable{};
        g2.cycle_value.clear();
    } else {
        std::map<std::vector<Vertex>, Outcome> kept;
        for (const auto &[cyc, val] : game.cycle_value) {
            bool alive = true;
            for (size_t k = 0; k < cyc.size() && alive; ++k)
                alive = g2.has_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
            if (alive) kept.emplace(cyc, val);
        }
        g2.cycle_value = std::move(kept);
    }
    lc.identity = g2 == game;
    lc.collapsed = std::move(g2);
    return lc;
}

namespace {

// ≺_i-maximal element of a label set; ties to the smallest outcome index.
int label_max(const GameGraph &game, const LeafedGameInfo &info, PlayerId i,
              const std::set<int> &label) {
    int best = -1;
    for (int o : label)
        if (best < 0 || prefers(game.prefs, i, info.outcomes[best], info.outcomes[o])) best = o;
    return best;
}

} // namespace

MooreProfile weak_spe_from_labeling(const GameGraph &game, const LeafedGameInfo &info,
                                    const Labeling &fixpoint,
                                    const std::optional<Outcome> &initial_outcome) {
    const int nv = game.num_vertices();
    const int no = info.num_outcomes();
    const int init = no; // extra initial state

    int o0 = -1;
    if (initial_outcome) {
        auto it = std::lower_bound(info.outcomes.begin(), info.outcomes.end(), *initial_outcome);
        if (it == info.outcomes.end() || !(*it == *initial_outcome))
            throw GameError(ErrorCode::SemanticError, "initial outcome is not a leaf outcome");
        o0 = static_cast<int>(it - info.outcomes.begin());
    }

    // ρ_{v,o} forests: per outcome a BFS forest toward the o-leaves inside
    // U_o = {v | o ∈ λ*(v)} (ascending tie-breaks). At the fixpoint every
    // vertex of U_o has such a path (the labeling survives Adjust).
    std::vector<std::vector<Vertex>> forest(no, std::vector<Vertex>(nv, -1));
    for (int o = 0; o < no; ++o) {
        std::vector<int> dist(nv, std::numeric_limits<int>::max());
        std::deque<Vertex> queue;
        for (Vertex l : info.leaves)
            if (info.leaf_outcome[l] == o) {
                dist[l] = 0;
                forest[o][l] = l;
                queue.push_back(l);
            }
        while (!queue.empty()) {
            Vertex w = queue.front();
            queue.pop_front();
            for (Vertex v : game.pred[w])
                if (fixpoint.contains(v, o) && dist[v] == std::numeric_limits<int>::max()) {
                    dist[v] = dist[w] + 1;
                    queue.push_back(v);
                }
        }
        for (Vertex v = 0; v < nv; ++v) {
            if (!fixpoint.contains(v, o) || forest[o][v] >= 0) continue;
            if (dist[v] == std::numeric_limits<int>::max())
                throw GameError(ErrorCode::SemanticError,
                                "labeling is not a fixpoint: no labeled path from '" +
                                    game.vertex_names[v] + "'");
            for (Vertex w : game.succ[v])
                if (w != v && fixpoint.contains(w, o) && dist[w] == dist[v] - 1) {
                    forest[o][v] = w;
                    break;
                }
        }
    }

    // Default target at v: the owner's preferred label.
    std::vector<int> fallback(nv);
    for (Vertex v = 0; v < nv; ++v)
        fallback[v] = label_max(game, info, game.owner[v], fixpoint.label[v]);

    auto effective = [&](int state, Vertex v) {
        int o = state == init ? (o0 >= 0 ? o0 : fallback[v]) : state;
        return fixpoint.contains(v, o) ? o : fallback[v];
    };

    std::vector<std::vector<Vertex>> next(init + 1, std::vector<Vertex>(nv, -1));
    for (int s = 0; s <= init; ++s)
        for (Vertex v = 0; v < nv; ++v)
            next[s][v] = game.leaf[v] ? v : forest[effective(s, v)][v];

    std::vector<std::vector<int>> upd(init + 1, std::vector<int>(game.num_edges(), 0));
    for (int s = 0; s <= init; ++s) {
        for (Vertex u = 0; u < nv; ++u) {
            const PlayerId who = game.owner[u];
            const int o = effective(s, u);
            for (size_t slot = 0; slot < game.succ[u].size(); ++slot) {
                Vertex w = game.succ[u][slot];
                int e = game.edge_offset[u] + static_cast<int>(slot);
                if (game.leaf[u]) {
                    upd[s][e] = o;
                    continue;
                }
                if (next[s][u] == w && fixpoint.contains(w, o)) {
                    upd[s][e] = o; // the prescribed move keeps the target outcome
                    continue;
                }
                // Deviating edge: ≺_{owner(u)}-maximal o' ∈ λ*(w) with
                // o' ⪯_{owner(u)} o. Nonempty since λ* survives Remove.
                int chosen = -1;
                for (int op : fixpoint.label[w]) {
                    if (prefers(game.prefs, who, info.outcomes[o], info.outcomes[op])) continue;
                    if (chosen < 0 ||
                        prefers(game.prefs, who, info.outcomes[chosen], info.outcomes[op]))
                        chosen = op;
                }
                upd[s][e] = chosen >= 0 ? chosen : fallback[w];
            }
        }
    }

    MooreProfile profile;
    for (PlayerId i = 0; i < game.num_players(); ++i) {
        MooreMachine m;
        m.player = i;
        m.states = init + 1;
        m.initial = init;
        m.next_move = next;
        m.update = upd;
        profile.machines.push_back(std::move(m));
    }
    return profile;
}

MooreProfile compose_profiles(const GameGraph &game, const LeafCollapse &collapse,
                              const MooreProfile &outer) {
    if (collapse.identity) return outer;
    MooreProfile out;
    for (PlayerId i = 0; i < game.num_players(); ++i) {
        const MooreMachine &src = outer.machines[i];
        MooreMachine m;
        m.player = i;
        m.states = src.states;
        m.initial = src.initial;
        m.next_move.assign(src.states, std::vector<Vertex>(game.num_vertices(), -1));
        m.update.assign(src.states, std::vector<int>(game.num_edges(), 0));
        for (int s = 0; s < src.states; ++s) {
            for (Vertex v = 0; v < game.num_vertices(); ++v) {
                int c = collapse.bottom_comp[v];
                m.next_move[s][v] = c >= 0 ? collapse.inner.at(c).moves[v] : src.next_move[s][v];
                for (size_t slot = 0; slot < game.succ[v].size(); ++slot) {
                    int e = game.edge_offset[v] + static_cast<int>(slot);
                    if (c >= 0) {
                        m.update[s][e] = s; // memory frozen inside the component
                    } else {
                        int e2 = collapse.collapsed.edge_index(v, game.succ[v][slot]);
                        m.update[s][e] = src.update[s][e2];
                    }
                }
            }
        }
        out.machines.push_back(std::move(m));
    }
    return out;
}

MooreProfile solve_weak_spe(const GameGraph &game, Vertex v0) {
    if (v0 < 0 || v0 >= game.num_vertices())
        throw GameError(ErrorCode::SemanticError, "initial vertex out of range");
    auto sccs = compute_sccs(game);
    if (sccs.is_bottom[sccs.component_of[v0]])
        return uniform_profile_for_scc(game, sccs.components[sccs.component_of[v0]]).profile;
    auto collapse = collapse_to_leafed(game);
    auto fx = run_fixpoint(collapse.collapsed);
    auto outer = weak_spe_from_labeling(collapse.collapsed, fx.info, fx.labeling);
    return compose_profiles(game, collapse, outer);
}

NotLayeredError::NotLayeredError(const GameGraph &game, const BadPattern &w)
    : std::runtime_error("outcomes are not layered: players " + game.players[w.i] + "/" +
                         game.players[w.i2] + " conflict on (" + outcome_to_string(game, w.o) +
                         ", " + outcome_to_string(game, w.p) + ", " +
                         outcome_to_string(game, w.q) + ")"),
      witness(w) {}

LayeredResult check_layered(const GameGraph &game, std::vector<Outcome> outcomes) {
    std::sort(outcomes.begin(), outcomes.end());
    outcomes.erase(std::unique(outcomes.begin(), outcomes.end()), outcomes.end());
    const int n = static_cast<int>(outcomes.size());
    const int np = game.num_players();
    auto lt = [&](PlayerId i, int a, int b) { return prefers(game.prefs, i, outcomes[a], outcomes[b]); };

    // Lexicographically first (i, i', o, p, q) with o ≺_i p ≺_i q ∧ q ≺_i' o ≺_i' p.
    for (PlayerId i = 0; i < np; ++i)
        for (PlayerId i2 = 0; i2 < np; ++i2) {
            if (i2 == i) continue;
            for (int o = 0; o < n; ++o)
                for (int p = 0; p < n; ++p) {
                    if (p == o || !lt(i, o, p) || !lt(i2, o, p)) continue;
                    for (int q = 0; q < n; ++q) {
                        if (q == o || q == p) continue;
                        if (lt(i, p, q) && lt(i2, q, o))
                            return BadPattern{i, i2, outcomes[o], outcomes[p], outcomes[q]};
                    }
                }
        }
    // Tie conflicts (payoff outcomes only): one player strict, another tied.
    for (PlayerId i = 0; i < np; ++i)
        for (PlayerId i2 = 0; i2 < np; ++i2) {
            if (i2 == i) continue;
            for (int o = 0; o < n; ++o)
                for (int p = 0; p < n; ++p)
                    if (p != o && lt(i, o, p) && !lt(i2, o, p) && !lt(i2, p, o))
                        return BadPattern{i, i2, outcomes[o], outcomes[p], outcomes[p]};
        }

    // Greedy coarsest partition over player 0's descending order. Blocks are
    // intervals; every boundary must be a unanimous dominance cut.
    std::vector<int> order(n);
    for (int k = 0; k < n; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (lt(0, b, a)) return true;
        if (lt(0, a, b)) return false;
        return a < b;
    });
    auto within_ok = [&](int from, int to) {
        for (PlayerId i = 1; i < np; ++i) {
            bool same = true, inverse = true;
            for (int x = from; x <= to; ++x)
                for (int y = from; y <= to; ++y) {
                    if (x == y) continue;
                    bool p0 = lt(0, order[x], order[y]);
                    if (lt(i, order[x], order[y]) != p0) same = false;
                    if (lt(i, order[y], order[x]) != p0) inverse = false;
                }
            if (!same && !inverse) return false;
        }
        return true;
    };
    auto dominance_cut = [&](int after) { // everything <= after beats everything > after
        for (PlayerId i = 0; i < np; ++i)
            for (int x = 0; x <= after; ++x)
                for (int y = after + 1; y < n; ++y)
                    if (!lt(i, order[y], order[x])) return false;
        return true;
    };
    std::vector<std::pair<int, int>> intervals;
    int start = 0;
    while (start < n) {
        int end = start;
        while (end + 1 < n && within_ok(start, end + 1)) ++end;
        int cut = -1;
        for (int c = end; c >= start; --c)
            if (c == n - 1 || dominance_cut(c)) {
                cut = c;
                break;
            }
        if (cut < 0)
            throw std::logic_error("layer construction failed on a pattern-free input");
        intervals.emplace_back(start, cut);
        start = cut + 1;
    }

    LayerPartition part; // ascending preference: reverse the descending scan
    for (auto it = intervals.rbegin(); it != intervals.rend(); ++it) {
        std::vector<Outcome> block;
        for (int k = it->first; k <= it->second; ++k) block.push_back(outcomes[order[k]]);
        std::vector<bool> rev(np, false);
        for (PlayerId i = 0; i < np; ++i) {
            bool same = true;
            for (size_t x = 0; x < block.size() && same; ++x)
                for (size_t y = 0; y < block.size() && same; ++y)
                    if (x != y && prefers(game.prefs, i, block[x], block[y]) !=
                                      prefers(game.prefs, 0, block[x], block[y]))
                        same = false;
            rev[i] = !same;
        }
        part.blocks.push_back(std::move(block));
        part.reversed.push_back(std::move(rev));
    }
    return part;
}

namespace {

struct LayeredContext {
    const GameGraph &game;
    const SccDecomposition &sccs;
    const std::vector<ComponentSolution> &solutions; // indexed by component id
    std::vector<Vertex> &moves;
};

void assign_cycles_and_reach(LayeredContext &ctx, const std::vector<bool> &region,
                             const std::vector<int> &comp_ids) {
    std::vector<std::vector<Vertex>> cycles;
    for (int c : comp_ids) cycles.push_back(ctx.solutions[c].cycle);
    auto local = cycle_reach_moves(ctx.game, region, cycles);
    for (Vertex v = 0; v < ctx.game.num_vertices(); ++v)
        if (region[v]) {
            if (local[v] < 0)
                throw std::logic_error("layered region vertex cannot reach its cycles");
            ctx.moves[v] = local[v];
        }
}

// Lemma-8 style one-layer solution on the region: induction on the number of
// distinct component outcomes, separating the meta-player-1 favourite via the
// attractor loop.
void solve_one_layer(LayeredContext &ctx, std::vector<bool> region, std::vector<int> comp_ids) {
    const GameGraph &g = ctx.game;
    std::vector<Outcome> distinct;
    for (int c : comp_ids) distinct.push_back(ctx.solutions[c].outcome);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    if (distinct.size() <= 1) {
        assign_cycles_and_reach(ctx, region, comp_ids);
        return;
    }

    // Meta-player 1: players whose restricted order matches player 0's; the
    // rest have the inverse order (guaranteed by layeredness).
    std::vector<bool> meta1(g.num_players(), false);
    for (PlayerId i = 0; i < g.num_players(); ++i) {
        bool same = true;
        for (size_t x = 0; x < distinct.size() && same; ++x)
            for (size_t y = 0; y < distinct.size() && same; ++y)
                if (x != y && prefers(g.prefs, i, distinct[x], distinct[y]) !=
                                  prefers(g.prefs, 0, distinct[x], distinct[y]))
                    same = false;
        meta1[i] = same;
    }
    // Meta-player 1's favourite outcome.
    Outcome top = distinct[0];
    for (const Outcome &o : distinct)
        if (prefers(g.prefs, 0, top, o)) top = o;

    std::vector<int> favoured, rest;
    for (int c : comp_ids)
        (ctx.solutions[c].outcome == top ? favoured : rest).push_back(c);

    std::set<std::vector<Vertex>> rest_comps;
    for (int c : rest) rest_comps.insert(ctx.sccs.components[c]);

    std::vector<bool> vprime(g.num_vertices(), false);
    for (int c : favoured)
        for (Vertex v : ctx.sccs.components[c]) vprime[v] = true;
    while (true) {
        vprime = attractor(g, vprime, meta1, &region);
        std::vector<bool> remainder(g.num_vertices(), false);
        bool any = false;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            remainder[v] = region[v] && !vprime[v];
            any = any || remainder[v];
        }
        if (!any) break;
        auto subs = compute_sccs(g, &remainder);
        bool grew = false;
        for (int d = 0; d < static_cast<int>(subs.components.size()); ++d) {
            if (!subs.is_bottom[d]) continue;
            if (rest_comps.count(subs.components[d])) continue;
            for (Vertex v : subs.components[d]) vprime[v] = true;
            grew = true;
        }
        if (!grew) break;
    }

    assign_cycles_and_reach(ctx, vprime, favoured);
    std::vector<bool> vsecond(g.num_vertices(), false);
    bool nonempty = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        vsecond[v] = region[v] && !vprime[v];
        nonempty = nonempty || vsecond[v];
    }
    if (nonempty) solve_one_layer(ctx, std::move(vsecond), std::move(rest));
}

} // namespace

MooreProfile uniform_weak_spe_layered(const GameGraph &game) {
    auto sccs = compute_sccs(game);
    auto bottoms = sccs.bottom_ids();
    std::vector<ComponentSolution> solutions(sccs.components.size());
    std::vector<Outcome> outcomes;
    for (int c : bottoms) {
        solutions[c] = uniform_profile_for_scc(game, sccs.components[c]);
        outcomes.push_back(solutions[c].outcome);
    }

    auto layered = check_layered(game, outcomes);
    if (std::holds_alternative<BadPattern>(layered))
        throw NotLayeredError(game, std::get<BadPattern>(layered));
    const auto &partition = std::get<LayerPartition>(layered);

    std::vector<Vertex> moves(game.num_vertices(), -1);
    LayeredContext ctx{game, sccs, solutions, moves};

    std::vector<bool> active(game.num_vertices(), true);
    for (auto bit = partition.blocks.rbegin(); bit != partition.blocks.rend(); ++bit) {
        std::vector<int> block_comps;
        std::vector<bool> targets(game.num_vertices(), false);
        for (int c : bottoms) {
            bool in_block = std::find(bit->begin(), bit->end(), solutions[c].outcome) != bit->end();
            if (!in_block) continue;
            block_comps.push_back(c);
            for (Vertex v : sccs.components[c]) targets[v] = true;
        }
        if (block_comps.empty()) continue;
        auto vprime = backward_reach_within(game, active, targets);
        solve_one_layer(ctx, vprime, block_comps);
        for (Vertex v = 0; v < game.num_vertices(); ++v)
            if (vprime[v]) active[v] = false;
    }
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        if (moves[v] < 0) throw std::logic_error("layered synthesis left a vertex unassigned");
    return positional_profile(game, moves);
}

} // namespace wspe
