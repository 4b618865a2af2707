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

#ifndef WSPE_FIXPOINT_HPP
#define WSPE_FIXPOINT_HPP

#include <optional>
#include <set>
#include <vector>

#include "wspe/game.hpp"

namespace wspe {

/// The leaf-outcome universe of a leafed game: the distinct outcomes of leaf
/// self-loops, in canonical order, and the outcome index of each leaf.
struct LeafedGameInfo {
    std::vector<Outcome> outcomes;   // O_L, deduplicated
    std::vector<int> leaf_outcome;   // per vertex: index into outcomes, -1 if not a leaf
    std::vector<Vertex> leaves;      // ascending

    int num_outcomes() const { return static_cast<int>(outcomes.size()); }
};

/// Collects and indexes the leaf outcomes. Requires a nonempty leaf set.
LeafedGameInfo leafed_info(const GameGraph &game);

/// Per-vertex set of still-plausible leaf outcomes (indices into
/// LeafedGameInfo::outcomes), shrunk by Remove/Adjust. For every leaf l the
/// label stays {o_l} at every step; sets only shrink.
struct Labeling {
    std::vector<std::set<int>> label;
    int step = 0;

    bool contains(Vertex v, int o) const { return label[v].count(o) != 0; }
};

struct RemovedPair {
    Vertex v;
    int outcome;

    friend bool operator==(const RemovedPair &, const RemovedPair &) = default;
};

/// Step-by-step record of one fixpoint run. Events alternate Remove/Adjust;
/// the step index of an event is its 1-based position. Replaying the events
/// on the initial labeling reconstructs every intermediate labeling.
struct FixpointTrace {
    struct Event {
        enum Kind { Remove, Adjust } kind;
        RemovedPair removed;                  // Remove events
        std::vector<RemovedPair> adjusted;    // Adjust events (may be empty)
    };
    std::vector<Event> events;
    int converged_step = 0; // step index at which the labeling was last touched

    int total_removals() const;
};

struct FixpointOptions {
    bool check_invariants = false;
    // Scan vertices in descending order in Remove (experiment hook; the
    // deterministic contract is ascending).
    bool reverse_vertex_order = false;
};

struct FixpointResult {
    LeafedGameInfo info;
    Labeling labeling;
    FixpointTrace trace;
};

/// λ_0(v) = outcomes of leaves reachable from v. Throws UnreachableLeaf if
/// some vertex reaches no leaf (condition 1 of the leafed-game hypotheses).
Labeling initial_labeling(const GameGraph &game, const LeafedGameInfo &info);

/// m(v) = max_{≺_v} { min_{≺_v} λ(v') | v' ∈ Succ(v) }, where Succ(v)
/// excludes v itself. nullopt encodes ⊤ (no successor, or all successor
/// labels empty); successors with empty labels are skipped otherwise.
std::optional<int> m_value(const GameGraph &game, const LeafedGameInfo &info,
                           const Labeling &labeling, Vertex v);

/// The removable pair the next Remove step would delete, if any: smallest
/// vertex index, then ≺_v-smallest outcome o with a successor v' whose whole
/// label the owner strictly prefers to o. Does not modify the labeling.
std::optional<RemovedPair> find_removable(const GameGraph &game, const LeafedGameInfo &info,
                                          const Labeling &labeling,
                                          bool reverse_vertex_order = false);

/// Applies one Remove step; returns the removed pair or nothing.
std::optional<RemovedPair> remove_step(const GameGraph &game, const LeafedGameInfo &info,
                                       Labeling &labeling, bool reverse_vertex_order = false);

/// Applies the Adjust step following `removed`: deletes outcome o everywhere
/// no o-labeled path to a leaf with outcome o survives. Returns the deleted
/// pairs in ascending vertex order.
std::vector<RemovedPair> adjust_step(const GameGraph &game, const LeafedGameInfo &info,
                                     Labeling &labeling, const RemovedPair &removed);

/// Alternates Remove/Adjust until Remove finds nothing. All final labels are
/// nonempty. With check_invariants set, INV1-INV3 are asserted after the
/// initial labeling and after every step (throws InvariantViolation).
FixpointResult run_fixpoint(const GameGraph &game, const FixpointOptions &options = {});

/// true iff no Remove applies and every labeled (v, o) has an o-labeled path
/// to a leaf with outcome o (i.e. Adjust would delete nothing either).
bool is_fixpoint(const GameGraph &game, const LeafedGameInfo &info, const Labeling &labeling);

/// INV1: {o ∈ λ(v') | m(v) ⪯_v o} ⊆ λ(v) for all edges into successors.
/// INV2: all labels nonempty.
/// INV3: from every v a path to a leaf along vertices u with λ(u) ⊆ λ(v).
/// Throws InvariantViolation with the failing invariant's number.
void check_invariants(const GameGraph &game, const LeafedGameInfo &info,
                      const Labeling &labeling, int step);

} // namespace wspe

#endif
