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

#include "wspe/verify.hpp"

#include <deque>
#include <map>

namespace wspe {

std::set<ProductState> reachable_product_states(const GameGraph &game,
                                                const MooreProfile &profile, Vertex v0) {
    std::set<ProductState> seen;
    std::deque<ProductState> queue{start_state(profile, v0)};
    seen.insert(queue.front());
    while (!queue.empty()) {
        ProductState s = queue.front();
        queue.pop_front();
        for (Vertex w : game.succ[s.vertex]) {
            ProductState t = advance(game, profile, s, w);
            if (seen.insert(t).second) queue.push_back(t);
        }
    }
    return seen;
}

namespace {

// Outcome of the induced play from each product state, memoized along the
// walked path (prefix-independent evaluation: only the cycle matters).
class OutcomeCache {
public:
    OutcomeCache(const GameGraph &game, const MooreProfile &profile)
        : game_(game), profile_(profile) {}

    const Outcome &outcome_from(const ProductState &start) {
        auto hit = cache_.find(start);
        if (hit != cache_.end()) return hit->second;
        std::vector<ProductState> path;
        std::map<ProductState, int> pos;
        ProductState cur = start;
        while (true) {
            auto known = cache_.find(cur);
            if (known != cache_.end()) {
                for (const auto &s : path) cache_.emplace(s, known->second);
                return cache_.at(start);
            }
            auto [it, fresh] = pos.emplace(cur, static_cast<int>(path.size()));
            if (!fresh) {
                std::vector<Vertex> cyc;
                for (size_t k = it->second; k < path.size(); ++k) cyc.push_back(path[k].vertex);
                Outcome o = outcome_of_lasso(game_, Lasso{{}, primitive_cycle(cyc)});
                for (const auto &s : path) cache_.emplace(s, o);
                return cache_.at(start);
            }
            path.push_back(cur);
            cur = step(game_, profile_, cur);
        }
    }

private:
    const GameGraph &game_;
    const MooreProfile &profile_;
    std::map<ProductState, Outcome> cache_;
};

} // namespace

Verdict check_very_weak_spe(const GameGraph &game, const MooreProfile &profile, Vertex v0) {
    OutcomeCache cache(game, profile);
    for (const ProductState &s : reachable_product_states(game, profile, v0)) {
        const PlayerId who = game.owner[s.vertex];
        const Outcome &before = cache.outcome_from(s);
        for (Vertex w : game.succ[s.vertex]) {
            const Outcome &after = cache.outcome_from(advance(game, profile, s, w));
            if (prefers(game.prefs, who, before, after))
                return Verdict{Counterexample{s, w, who, before, after}};
        }
    }
    return Verdict{};
}

bool check_deviation_profitable(const GameGraph &game, const MooreProfile &profile,
                                PlayerId deviator, const MooreMachine &machine, Vertex v0) {
    MooreProfile hybrid = profile;
    hybrid.machines[deviator] = machine;
    hybrid.machines[deviator].player = deviator;
    Outcome original =
        outcome_of_lasso(game, induced_lasso(game, profile, start_state(profile, v0)));
    Outcome deviated =
        outcome_of_lasso(game, induced_lasso(game, hybrid, start_state(hybrid, v0)));
    return prefers(game.prefs, deviator, original, deviated);
}

PositionalProfileEnumerator::PositionalProfileEnumerator(const GameGraph &game,
                                                         std::uint64_t bound)
    : game_(game), counter_(game.num_vertices(), 0), total_(1) {
    for (Vertex v = 0; v < game.num_vertices(); ++v) {
        total_ *= game.succ[v].size();
        if (total_ > bound)
            throw GameError(ErrorCode::TooManyProfiles,
                            "positional profile space exceeds " + std::to_string(bound));
    }
}

std::optional<MooreProfile> PositionalProfileEnumerator::next() {
    if (done_) return std::nullopt;
    std::vector<Vertex> moves(game_.num_vertices());
    for (Vertex v = 0; v < game_.num_vertices(); ++v) moves[v] = game_.succ[v][counter_[v]];
    MooreProfile p;
    for (PlayerId i = 0; i < game_.num_players(); ++i)
        p.machines.push_back(MooreMachine::positional(game_, i, moves));
    // increment, last vertex fastest
    done_ = true;
    for (int v = game_.num_vertices() - 1; v >= 0; --v) {
        if (++counter_[v] < static_cast<int>(game_.succ[v].size())) {
            done_ = false;
            break;
        }
        counter_[v] = 0;
    }
    return p;
}

namespace {

struct TreeSolver {
    const GameGraph &game;
    int max_depth;
    std::vector<int> state; // 0 unvisited, 1 on stack, 2 done
    std::vector<Outcome> value;
    std::vector<Vertex> choice;
    std::vector<int> height;

    explicit TreeSolver(const GameGraph &g, int depth)
        : game(g), max_depth(depth), state(g.num_vertices(), 0), value(g.num_vertices()),
          choice(g.num_vertices(), -1), height(g.num_vertices(), 0) {}

    void solve(Vertex v) {
        if (state[v] == 2) return;
        if (state[v] == 1)
            throw GameError(ErrorCode::NotATree,
                            "cycle through vertex '" + game.vertex_names[v] + "'");
        state[v] = 1;
        if (game.leaf[v]) {
            value[v] = outcome_of_lasso(game, Lasso{{}, {v}});
            choice[v] = v;
            height[v] = 0;
        } else {
            const PlayerId who = game.owner[v];
            bool first = true;
            for (Vertex w : game.succ[v]) {
                if (w == v)
                    throw GameError(ErrorCode::NotATree,
                                    "self-loop at non-leaf vertex '" + game.vertex_names[v] + "'");
                solve(w);
                height[v] = std::max(height[v], height[w] + 1);
                if (first || prefers(game.prefs, who, value[v], value[w])) {
                    value[v] = value[w];
                    choice[v] = w;
                    first = false;
                }
            }
            if (height[v] > max_depth)
                throw GameError(ErrorCode::NotATree,
                                "unraveling exceeds depth " + std::to_string(max_depth));
        }
        state[v] = 2;
    }
};

} // namespace

MooreProfile backward_induction_tree(const GameGraph &game, Vertex v0, int depth) {
    TreeSolver solver(game, depth);
    solver.solve(v0);
    std::vector<Vertex> moves(game.num_vertices());
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        moves[v] = solver.choice[v] >= 0 ? solver.choice[v] : game.succ[v][0];
    MooreProfile p;
    for (PlayerId i = 0; i < game.num_players(); ++i)
        p.machines.push_back(MooreMachine::positional(game, i, moves));
    return p;
}

} // namespace wspe
