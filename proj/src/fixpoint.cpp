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

#include "wspe/fixpoint.hpp"

#include <algorithm>

#include "wspe/graph.hpp"

namespace wspe {

int FixpointTrace::total_removals() const {
    int n = 0;
    for (const auto &e : events)
        n += e.kind == Event::Remove ? 1 : static_cast<int>(e.adjusted.size());
    return n;
}

LeafedGameInfo leafed_info(const GameGraph &game) {
    LeafedGameInfo info;
    info.leaf_outcome.assign(game.num_vertices(), -1);
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        if (game.leaf[v]) info.leaves.push_back(v);
    if (info.leaves.empty())
        throw GameError(ErrorCode::UnreachableLeaf, "game has no leaves");

    std::vector<Outcome> values;
    for (Vertex l : info.leaves) values.push_back(outcome_of_lasso(game, Lasso{{}, {l}}));
    // Canonical order: symbolic outcomes by id, payoff vectors lexicographic.
    info.outcomes = values;
    std::sort(info.outcomes.begin(), info.outcomes.end());
    info.outcomes.erase(std::unique(info.outcomes.begin(), info.outcomes.end()),
                        info.outcomes.end());
    for (size_t k = 0; k < info.leaves.size(); ++k) {
        auto it = std::lower_bound(info.outcomes.begin(), info.outcomes.end(), values[k]);
        info.leaf_outcome[info.leaves[k]] = static_cast<int>(it - info.outcomes.begin());
    }
    return info;
}

Labeling initial_labeling(const GameGraph &game, const LeafedGameInfo &info) {
    const int nv = game.num_vertices();
    Labeling lab;
    lab.label.assign(nv, {});
    std::vector<bool> all(nv, true);
    for (int o = 0; o < info.num_outcomes(); ++o) {
        std::vector<bool> targets(nv, false);
        for (Vertex l : info.leaves)
            if (info.leaf_outcome[l] == o) targets[l] = true;
        auto reach = backward_reach_within(game, all, targets);
        for (Vertex v = 0; v < nv; ++v)
            if (reach[v]) lab.label[v].insert(o);
    }
    for (Vertex v = 0; v < nv; ++v)
        if (lab.label[v].empty())
            throw GameError(ErrorCode::UnreachableLeaf,
                            "no leaf reachable from vertex '" + game.vertex_names[v] + "'");
    return lab;
}

namespace {

// Successors of v distinct from v.
template <typename Fn>
void for_proper_successors(const GameGraph &game, Vertex v, Fn &&fn) {
    for (Vertex w : game.succ[v])
        if (w != v) fn(w);
}

bool player_prefers(const GameGraph &game, PlayerId i, const Outcome &a, const Outcome &b) {
    return prefers(game.prefs, i, a, b);
}

// min_{≺_i} over a label set; ties resolved to the smallest outcome index.
std::optional<int> label_min(const GameGraph &game, const LeafedGameInfo &info, PlayerId i,
                             const std::set<int> &label) {
    std::optional<int> best;
    for (int o : label)
        if (!best || player_prefers(game, i, info.outcomes[o], info.outcomes[*best])) best = o;
    return best;
}

} // namespace

std::optional<int> m_value(const GameGraph &game, const LeafedGameInfo &info,
                           const Labeling &labeling, Vertex v) {
    const PlayerId i = game.owner[v];
    std::optional<int> best;
    for_proper_successors(game, v, [&](Vertex w) {
        auto mn = label_min(game, info, i, labeling.label[w]);
        if (!mn) return;
        if (!best || player_prefers(game, i, info.outcomes[*best], info.outcomes[*mn])) best = mn;
    });
    return best;
}

std::optional<RemovedPair> find_removable(const GameGraph &game, const LeafedGameInfo &info,
                                          const Labeling &labeling, bool reverse_vertex_order) {
    const int nv = game.num_vertices();
    for (int k = 0; k < nv; ++k) {
        Vertex v = reverse_vertex_order ? nv - 1 - k : k;
        const PlayerId i = game.owner[v];
        // Candidates in ≺_v-ascending order.
        std::vector<int> cands(labeling.label[v].begin(), labeling.label[v].end());
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            return player_prefers(game, i, info.outcomes[a], info.outcomes[b]);
        });
        for (int o : cands) {
            bool removable = false;
            for_proper_successors(game, v, [&](Vertex w) {
                if (removable) return;
                bool all_above = true;
                for (int op : labeling.label[w])
                    if (!player_prefers(game, i, info.outcomes[o], info.outcomes[op])) {
                        all_above = false;
                        break;
                    }
                removable = all_above;
            });
            if (removable) return RemovedPair{v, o};
        }
    }
    return std::nullopt;
}

std::optional<RemovedPair> remove_step(const GameGraph &game, const LeafedGameInfo &info,
                                       Labeling &labeling, bool reverse_vertex_order) {
    auto pair = find_removable(game, info, labeling, reverse_vertex_order);
    if (pair) labeling.label[pair->v].erase(pair->outcome);
    return pair;
}

std::vector<RemovedPair> adjust_step(const GameGraph &game, const LeafedGameInfo &info,
                                     Labeling &labeling, const RemovedPair &removed) {
    const int nv = game.num_vertices();
    const int o = removed.outcome;
    // Survivors are the vertices with an o-labeled path to an o-leaf. The
    // labeled-path property is suffix-closed, so one backward reachability
    // from the o-leaves inside the o-labeled region decides every vertex.
    std::vector<bool> allowed(nv, false), targets(nv, false);
    for (Vertex v = 0; v < nv; ++v) allowed[v] = labeling.contains(v, o);
    for (Vertex l : info.leaves)
        if (info.leaf_outcome[l] == o && allowed[l]) targets[l] = true;
    auto keep = backward_reach_within(game, allowed, targets);
    std::vector<RemovedPair> deleted;
    for (Vertex v = 0; v < nv; ++v)
        if (allowed[v] && !keep[v]) {
            labeling.label[v].erase(o);
            deleted.push_back(RemovedPair{v, o});
        }
    return deleted;
}

FixpointResult run_fixpoint(const GameGraph &game, const FixpointOptions &options) {
    FixpointResult res{leafed_info(game), {}, {}};
    res.labeling = initial_labeling(game, res.info);
    if (options.check_invariants) check_invariants(game, res.info, res.labeling, 0);
    while (true) {
        auto removed = remove_step(game, res.info, res.labeling, options.reverse_vertex_order);
        if (!removed) break;
        res.labeling.step += 1;
        res.trace.events.push_back(
            {FixpointTrace::Event::Remove, *removed, {}});
        if (options.check_invariants)
            check_invariants(game, res.info, res.labeling, res.labeling.step);

        auto adjusted = adjust_step(game, res.info, res.labeling, *removed);
        res.labeling.step += 1;
        res.trace.events.push_back(
            {FixpointTrace::Event::Adjust, *removed, std::move(adjusted)});
        if (options.check_invariants)
            check_invariants(game, res.info, res.labeling, res.labeling.step);
    }
    res.trace.converged_step = res.labeling.step;
    return res;
}

bool is_fixpoint(const GameGraph &game, const LeafedGameInfo &info, const Labeling &labeling) {
    if (find_removable(game, info, labeling)) return false;
    const int nv = game.num_vertices();
    for (int o = 0; o < info.num_outcomes(); ++o) {
        std::vector<bool> allowed(nv, false), targets(nv, false);
        bool any = false;
        for (Vertex v = 0; v < nv; ++v) {
            allowed[v] = labeling.contains(v, o);
            any = any || allowed[v];
        }
        if (!any) continue;
        for (Vertex l : info.leaves)
            if (info.leaf_outcome[l] == o && allowed[l]) targets[l] = true;
        auto keep = backward_reach_within(game, allowed, targets);
        for (Vertex v = 0; v < nv; ++v)
            if (allowed[v] && !keep[v]) return false;
    }
    return true;
}

void check_invariants(const GameGraph &game, const LeafedGameInfo &info,
                      const Labeling &labeling, int step) {
    const int nv = game.num_vertices();
    // INV2 first: the other checks assume nonempty labels make sense.
    for (Vertex v = 0; v < nv; ++v)
        if (labeling.label[v].empty())
            throw InvariantViolation(step, 2,
                                     "empty label at vertex '" + game.vertex_names[v] + "'");
    for (Vertex v = 0; v < nv; ++v) {
        auto m = m_value(game, info, labeling, v);
        if (!m) continue; // m = ⊤: nothing lies ⪰ ⊤
        const PlayerId i = game.owner[v];
        bool bad = false;
        for_proper_successors(game, v, [&](Vertex w) {
            for (int o : labeling.label[w])
                if (prefers_eq(game.prefs, i, info.outcomes[*m], info.outcomes[o]) &&
                    !labeling.contains(v, o))
                    bad = true;
        });
        if (bad)
            throw InvariantViolation(step, 1,
                                     "successor label above m(v) escapes λ(v) at '" +
                                         game.vertex_names[v] + "'");
    }
    for (Vertex v = 0; v < nv; ++v) {
        // Path to a leaf through vertices u with λ(u) ⊆ λ(v): backward
        // reachability from the in-range leaves restricted to that region.
        std::vector<bool> allowed(nv, false), targets(nv, false);
        for (Vertex u = 0; u < nv; ++u)
            allowed[u] = std::includes(labeling.label[v].begin(), labeling.label[v].end(),
                                       labeling.label[u].begin(), labeling.label[u].end());
        for (Vertex l : info.leaves)
            if (allowed[l]) targets[l] = true;
        auto reach = backward_reach_within(game, allowed, targets);
        if (!reach[v])
            throw InvariantViolation(step, 3,
                                     "no subset-monotone path to a leaf from '" +
                                         game.vertex_names[v] + "'");
    }
}

} // namespace wspe
