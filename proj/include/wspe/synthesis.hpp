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

#ifndef WSPE_SYNTHESIS_HPP
#define WSPE_SYNTHESIS_HPP

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "wspe/fixpoint.hpp"
#include "wspe/game.hpp"
#include "wspe/graph.hpp"
#include "wspe/strategy.hpp"

namespace wspe {

/// Uniform positional play inside one strongly connected component: a chosen
/// simple cycle, its outcome, and per-vertex moves (producing the cycle and
/// reaching it from the rest of the component).
struct ComponentSolution {
    std::vector<Vertex> cycle;
    Outcome outcome;                // o_C
    std::vector<Vertex> moves;      // per vertex; -1 outside the component
    MooreProfile profile;           // positional, defined on the component
};

/// Chooses smallest_simple_cycle(C) unless `cycle_override` is given (any
/// simple cycle inside C realizes a valid o_C; the override is an
/// experimentation hook).
ComponentSolution uniform_profile_for_scc(const GameGraph &game,
                                          const std::vector<Vertex> &component,
                                          const std::optional<Lasso> &cycle_override = std::nullopt);

/// A uniform positional profile producing the given simple cycles (one per
/// bottom component, all with the same outcome) and reaching them positionally
/// from every other vertex. Throws OutcomeMismatch when the cycles disagree.
MooreProfile uniform_profile_same_outcome(const GameGraph &game,
                                          const std::vector<std::vector<Vertex>> &cycles);

/// The derived leafed game: every vertex of every bottom SCC of the original
/// game becomes a leaf whose outcome is its component's o_C; inner uniform
/// profiles are retained for composition.
struct LeafCollapse {
    GameGraph collapsed;
    SccDecomposition sccs;              // of the original game
    std::vector<int> bottom_comp;       // per vertex: bottom component id, -1 otherwise
    std::map<int, ComponentSolution> inner; // keyed by bottom component id
    bool identity = false;              // collapsed game equals the original
};

LeafCollapse collapse_to_leafed(const GameGraph &game);

/// Builds the weak-SPE Moore profile from a Remove/Adjust fixpoint of a
/// leafed game. One shared machine per player with state set O_L plus one
/// initial state; in state o the machine follows a BFS forest toward the
/// o-leaves inside {v | o ∈ λ*(v)}; on a deviating edge (u, w) the state
/// switches to the ≺_{owner(u)}-maximal o' ∈ λ*(w) with o' ⪯_{owner(u)} o.
/// The initial state resolves at its first vertex v to `initial_outcome`
/// when given and in λ*(v), else to the ≺_{owner(v)}-maximal label.
MooreProfile weak_spe_from_labeling(const GameGraph &game, const LeafedGameInfo &info,
                                    const Labeling &fixpoint,
                                    const std::optional<Outcome> &initial_outcome = std::nullopt);

/// Combined machines: follow the outer profile until the play enters a
/// collapsed bottom component, then its uniform inner profile takes over
/// (bottom components are absorbing, so the current vertex itself tells the
/// machine which regime applies; no extra states are needed).
MooreProfile compose_profiles(const GameGraph &game, const LeafCollapse &collapse,
                              const MooreProfile &outer);

/// Full pipeline: collapse to a leafed game, run the fixpoint, build the
/// profile, compose with the inner profiles. When v0 already lies in a bottom
/// component, that component's uniform profile is returned directly.
MooreProfile solve_weak_spe(const GameGraph &game, Vertex v0);

/// Witness against layeredness: o ≺_i p ≺_i q and q ≺_{i'} o ≺_{i'} p.
/// The degenerate form q == p marks a tie conflict (some player strictly
/// orders {o, p}, another ties them), which can only arise with payoff
/// outcomes and equally rules out a layer partition.
struct BadPattern {
    PlayerId i = 0, i2 = 0;
    Outcome o, p, q;

    friend bool operator==(const BadPattern &, const BadPattern &) = default;
};

/// Ordered outcome blocks: k < k' implies every player prefers every outcome
/// of blocks[k'] to every outcome of blocks[k]; within a block every player's
/// restricted order equals player 0's (reversed[k][i] == false) or its
/// inverse (true).
struct LayerPartition {
    std::vector<std::vector<Outcome>> blocks;
    std::vector<std::vector<bool>> reversed;
};

using LayeredResult = std::variant<LayerPartition, BadPattern>;

/// Returns the lexicographically first bad pattern over (i, i', o, p, q) if
/// one exists, otherwise the coarsest layer partition (greedy downward from
/// the top of player 0's order). Outcomes are deduplicated first.
LayeredResult check_layered(const GameGraph &game, std::vector<Outcome> outcomes);

class NotLayeredError : public std::runtime_error {
public:
    NotLayeredError(const GameGraph &game, const BadPattern &witness);

    BadPattern witness;
};

/// Uniform positional weak SPE for prefix-independent games with layered
/// bottom-component outcomes (recursion over layers; inside one layer the
/// two-meta-player attractor separation). Throws NotLayeredError otherwise.
MooreProfile uniform_weak_spe_layered(const GameGraph &game);

} // namespace wspe

#endif
