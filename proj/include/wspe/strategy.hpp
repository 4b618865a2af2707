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

#ifndef WSPE_STRATEGY_HPP
#define WSPE_STRATEGY_HPP

#include <compare>
#include <vector>

#include "wspe/game.hpp"

namespace wspe {

/// Deterministic Moore machine encoding one player's strategy. The next-move
/// function reads (state, current vertex); the update function reads the
/// traversed edge, so the state at a vertex is a function of the whole
/// history before it. A machine that ignores the edge source is the classical
/// vertex-update machine as a special case.
struct MooreMachine {
    PlayerId player = 0;
    int states = 1;
    int initial = 0;
    // next_move[m][v]: prescribed edge target at v, or -1 when undefined.
    std::vector<std::vector<Vertex>> next_move;
    // update[m][e]: state after traversing global edge e.
    std::vector<std::vector<int>> update;

    friend bool operator==(const MooreMachine &, const MooreMachine &) = default;

    static MooreMachine positional(const GameGraph &game, PlayerId player,
                                   const std::vector<Vertex> &moves);
};

/// One machine per player, indexed by player.
struct MooreProfile {
    std::vector<MooreMachine> machines;

    friend bool operator==(const MooreProfile &, const MooreProfile &) = default;

    bool is_positional() const;
    /// Positional and with a move at every owned vertex.
    bool is_uniform(const GameGraph &game) const;
    int max_states() const;

    std::vector<int> initial_memory() const;
};

/// Whether every state of every machine prescribes the same move at each
/// vertex (the profile's behavior is positional even if it carries states).
bool is_behaviorally_positional(const GameGraph &game, const MooreProfile &profile);

/// Finite surrogate for a history: current vertex plus one memory state per
/// player. Product space size |V| * Π_i |M_i|.
struct ProductState {
    Vertex vertex = 0;
    std::vector<int> memory;

    auto operator<=>(const ProductState &) const = default;
};

ProductState start_state(const MooreProfile &profile, Vertex v0);

/// Product state after taking the edge (s.vertex, target): all memories
/// update on the traversed edge.
ProductState advance(const GameGraph &game, const MooreProfile &profile, const ProductState &s,
                     Vertex target);

/// The owner of s.vertex moves per its machine; memories update.
/// Throws ProfileIncomplete when the machine has no move there.
ProductState step(const GameGraph &game, const MooreProfile &profile, const ProductState &s);

/// Prescribed edge target at s, or -1.
Vertex prescribed_move(const GameGraph &game, const MooreProfile &profile, const ProductState &s);

/// Iterates step() until a product state repeats; the visited vertices split
/// at the first repeated state give the induced lasso (cycle reduced to its
/// primitive root).
Lasso induced_lasso(const GameGraph &game, const MooreProfile &profile, const ProductState &start);

/// For each outgoing edge of s.vertex (including the prescribed one), the
/// product state after taking it.
std::vector<std::pair<Vertex, ProductState>> deviation_successors(const GameGraph &game,
                                                                  const MooreProfile &profile,
                                                                  const ProductState &s);

} // namespace wspe

#endif
