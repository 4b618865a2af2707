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

#include "wspe/strategy.hpp"

#include <map>

namespace wspe {

MooreMachine MooreMachine::positional(const GameGraph &game, PlayerId player,
                                      const std::vector<Vertex> &moves) {
    MooreMachine m;
    m.player = player;
    m.states = 1;
    m.initial = 0;
    m.next_move.assign(1, std::vector<Vertex>(game.num_vertices(), -1));
    m.update.assign(1, std::vector<int>(game.num_edges(), 0));
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        if (game.owner[v] == player) m.next_move[0][v] = moves[v];
    return m;
}

bool MooreProfile::is_positional() const {
    for (const auto &m : machines)
        if (m.states != 1) return false;
    return true;
}

bool MooreProfile::is_uniform(const GameGraph &game) const {
    if (!is_positional()) return false;
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        if (machines[game.owner[v]].next_move[0][v] < 0) return false;
    return true;
}

int MooreProfile::max_states() const {
    int n = 0;
    for (const auto &m : machines) n = std::max(n, m.states);
    return n;
}

std::vector<int> MooreProfile::initial_memory() const {
    std::vector<int> mem;
    mem.reserve(machines.size());
    for (const auto &m : machines) mem.push_back(m.initial);
    return mem;
}

bool is_behaviorally_positional(const GameGraph &game, const MooreProfile &profile) {
    for (Vertex v = 0; v < game.num_vertices(); ++v) {
        const auto &m = profile.machines[game.owner[v]];
        for (int s = 1; s < m.states; ++s)
            if (m.next_move[s][v] != m.next_move[0][v]) return false;
    }
    return true;
}

ProductState start_state(const MooreProfile &profile, Vertex v0) {
    return ProductState{v0, profile.initial_memory()};
}

ProductState advance(const GameGraph &game, const MooreProfile &profile, const ProductState &s,
                     Vertex target) {
    int e = game.edge_index(s.vertex, target);
    if (e < 0)
        throw GameError(ErrorCode::SemanticError,
                        "move to non-successor '" + game.vertex_names[target] + "' from '" +
                            game.vertex_names[s.vertex] + "'");
    ProductState next;
    next.vertex = target;
    next.memory.reserve(s.memory.size());
    for (size_t i = 0; i < s.memory.size(); ++i)
        next.memory.push_back(profile.machines[i].update[s.memory[i]][e]);
    return next;
}

Vertex prescribed_move(const GameGraph &game, const MooreProfile &profile, const ProductState &s) {
    const auto &m = profile.machines[game.owner[s.vertex]];
    return m.next_move[s.memory[game.owner[s.vertex]]][s.vertex];
}

ProductState step(const GameGraph &game, const MooreProfile &profile, const ProductState &s) {
    Vertex target = prescribed_move(game, profile, s);
    if (target < 0)
        throw GameError(ErrorCode::ProfileIncomplete,
                        "no move at vertex '" + game.vertex_names[s.vertex] + "' in state " +
                            std::to_string(s.memory[game.owner[s.vertex]]));
    return advance(game, profile, s, target);
}

Lasso induced_lasso(const GameGraph &game, const MooreProfile &profile,
                    const ProductState &start) {
    std::map<ProductState, int> seen;
    std::vector<Vertex> visited;
    ProductState cur = start;
    while (true) {
        auto [it, fresh] = seen.emplace(cur, static_cast<int>(visited.size()));
        if (!fresh) {
            Lasso play;
            play.prefix.assign(visited.begin(), visited.begin() + it->second);
            play.cycle = primitive_cycle(
                std::vector<Vertex>(visited.begin() + it->second, visited.end()));
            return play;
        }
        visited.push_back(cur.vertex);
        cur = step(game, profile, cur);
    }
}

std::vector<std::pair<Vertex, ProductState>> deviation_successors(const GameGraph &game,
                                                                  const MooreProfile &profile,
                                                                  const ProductState &s) {
    std::vector<std::pair<Vertex, ProductState>> out;
    for (Vertex w : game.succ[s.vertex]) out.emplace_back(w, advance(game, profile, s, w));
    return out;
}

} // namespace wspe
