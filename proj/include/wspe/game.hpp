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

#ifndef WSPE_GAME_HPP
#define WSPE_GAME_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wspe/error.hpp"

namespace wspe {

using Rational = boost::rational<long long>;
using PlayerId = int;
using Vertex = int;

/// How plays are assigned outcomes.
enum class SpecKind {
    Leaf,       // outcome attached to each leaf (plus optional cycle overrides)
    MeanPayoff, // exact per-player average of edge weights along the cycle
    Limsup,     // per-player maximum edge weight on the cycle
    Parity,     // per-player win/lose from vertex priorities on the cycle
};

/// Outcome of a play: a symbolic outcome id, or one exact rational per player.
/// Within one game all outcomes have the same kind.
struct Outcome {
    int sym = -1;                  // valid when >= 0
    std::vector<Rational> payoff;  // valid when sym < 0

    bool symbolic() const { return sym >= 0; }

    friend bool operator==(const Outcome &a, const Outcome &b) {
        return a.sym == b.sym && a.payoff == b.payoff;
    }
    friend bool operator!=(const Outcome &a, const Outcome &b) { return !(a == b); }
    friend bool operator<(const Outcome &a, const Outcome &b) {
        if (a.sym != b.sym) return a.sym < b.sym;
        return std::lexicographical_compare(a.payoff.begin(), a.payoff.end(),
                                            b.payoff.begin(), b.payoff.end());
    }

    static Outcome symbol(int id) { return Outcome{id, {}}; }
    static Outcome vec(std::vector<Rational> p) { return Outcome{-1, std::move(p)}; }
};

/// Per-player strict total orders over symbolic outcomes. For payoff-vector
/// outcomes the table is empty and comparison is fixed to i-th-component `<`.
struct PreferenceTable {
    // rank[i][o]: position of symbolic outcome o in player i's order, 0 = worst.
    std::vector<std::vector<int>> rank;

    bool symbolic() const { return !rank.empty(); }

    friend bool operator==(const PreferenceTable &, const PreferenceTable &) = default;
};

/// true iff a ≺_i b (player i strictly prefers b).
bool prefers(const PreferenceTable &prefs, PlayerId i, const Outcome &a, const Outcome &b);

/// true iff a ⪯_i b, i.e. !(b ≺_i a).
inline bool prefers_eq(const PreferenceTable &prefs, PlayerId i, const Outcome &a,
                       const Outcome &b) {
    return !prefers(prefs, i, b, a);
}

/// An eventually-periodic play: finite prefix followed by a repeated cycle.
/// The cycle is primitive (not a repetition of a shorter word).
struct Lasso {
    std::vector<Vertex> prefix; // possibly empty
    std::vector<Vertex> cycle;  // nonempty

    friend bool operator==(const Lasso &, const Lasso &) = default;
};

/// Reduce a cycle to its primitive root (smallest period).
std::vector<Vertex> primitive_cycle(const std::vector<Vertex> &cycle);

/// Canonical rotation of a primitive cycle: starts at its smallest vertex;
/// among rotations starting there, the lexicographically smallest.
std::vector<Vertex> canonical_rotation(const std::vector<Vertex> &cycle);

/// Finite arena: vertices with owners, successor lists, derived leaf set,
/// and the outcome specification. Immutable after build_game.
struct GameGraph {
    std::vector<std::string> players;
    std::vector<std::string> vertex_names;
    std::vector<PlayerId> owner;
    std::vector<std::vector<Vertex>> succ; // ascending target index
    std::vector<std::vector<Vertex>> pred; // derived, ascending

    // leaf[v]: v has exactly one outgoing edge and it is the self-loop (v,v).
    std::vector<bool> leaf;

    SpecKind spec = SpecKind::Leaf;
    bool parity_max = false; // use the maximal priority on the cycle
    bool parity_odd = false; // odd priority wins

    std::vector<std::string> outcome_names; // symbolic outcomes (Leaf spec)
    PreferenceTable prefs;

    // Leaf spec: outcome per leaf. Holds arbitrary Outcome values so that
    // collapsed games can carry payoff-vector leaf outcomes.
    std::vector<std::optional<Outcome>> leaf_value;

    // MeanPayoff/Limsup: weights[v][k][i] = weight of edge (v, succ[v][k]) for player i.
    std::vector<std::vector<std::vector<Rational>>> weights;

    // Parity: priority[v][i].
    std::vector<std::vector<int>> priority;

    std::optional<Vertex> initial;

    // Leaf spec: outcomes of non-leaf cycles, keyed by canonical rotation.
    std::map<std::vector<Vertex>, Outcome> cycle_value;

    friend bool operator==(const GameGraph &, const GameGraph &) = default;

    int num_players() const { return static_cast<int>(players.size()); }
    int num_vertices() const { return static_cast<int>(vertex_names.size()); }

    // Global edge indexing: edges of v occupy [edge_offset[v], edge_offset[v+1]).
    std::vector<int> edge_offset;
    int num_edges() const { return edge_offset.back(); }
    int edge_index(Vertex from, Vertex to) const; // -1 if absent
    bool has_edge(Vertex from, Vertex to) const { return edge_index(from, to) >= 0; }

    std::optional<Vertex> vertex_by_name(const std::string &name) const;
};

/// Raw description consumed by build_game. Everything referenced by name.
struct GameDesc {
    std::vector<std::string> players;
    SpecKind spec = SpecKind::Leaf;
    bool parity_max = false;
    bool parity_odd = false;
    std::vector<std::string> outcomes;
    // prefer[i]: player i's outcome names in ascending preference (worst first).
    std::vector<std::vector<std::string>> prefer;

    struct VertexDesc {
        std::string name;
        std::string owner;
        std::optional<std::string> leaf_outcome;
        std::vector<int> priority;
    };
    struct EdgeDesc {
        std::string from, to;
        std::vector<Rational> weights;
    };
    struct CycleDesc {
        std::vector<std::string> cycle;
        std::string outcome;
    };

    std::vector<VertexDesc> vertices;
    std::vector<EdgeDesc> edges;
    std::optional<std::string> initial;
    std::vector<CycleDesc> cycles;
};

/// Validates the description and constructs the arena.
/// Throws GameError (DanglingEdge, SinkVertex, LeafWithExtraEdge,
/// MissingLeafOutcome, NonPermutationPreference, SemanticError).
GameGraph build_game(const GameDesc &desc);

/// Outcome of an eventually-periodic play. Prefix-independent: only the cycle
/// matters. Under the Leaf spec the cycle must be a leaf self-loop or carry a
/// declared cycle override, otherwise UndefinedOutcome is raised.
Outcome outcome_of_lasso(const GameGraph &game, const Lasso &play);

/// Checks that consecutive vertices (prefix, prefix->cycle, cycle wrap) are
/// edges and that the cycle is primitive and nonempty.
void validate_lasso(const GameGraph &game, const Lasso &play);

std::string outcome_to_string(const GameGraph &game, const Outcome &o);
std::string rational_to_string(const Rational &q);

} // namespace wspe

#endif
