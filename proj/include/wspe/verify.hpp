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

#ifndef WSPE_VERIFY_HPP
#define WSPE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <variant>

#include "wspe/game.hpp"
#include "wspe/strategy.hpp"

namespace wspe {

/// A profitable one-shot deviation: at `state`, the owner of state.vertex
/// strictly prefers the continuation after the alternative edge.
struct Counterexample {
    ProductState state;
    Vertex edge_target = -1;
    PlayerId owner = -1;
    Outcome outcome_before; // prescribed continuation
    Outcome outcome_after;  // deviated continuation
};

struct Verdict {
    std::optional<Counterexample> counterexample;

    bool ok() const { return !counterexample.has_value(); }
};

/// Closure of the start state under ALL edges (not just prescribed ones):
/// covers every subgame since a history is a sequence of arbitrary moves.
std::set<ProductState> reachable_product_states(const GameGraph &game,
                                                const MooreProfile &profile, Vertex v0);

/// One-shot-deviation check over the reachable product space. Ok certifies a
/// weak SPE (the one-shot and finite-deviation conditions coincide).
Verdict check_very_weak_spe(const GameGraph &game, const MooreProfile &profile, Vertex v0);

/// true iff the deviator strictly prefers the play where it follows
/// `machine` while everyone else follows the profile, from v0.
bool check_deviation_profitable(const GameGraph &game, const MooreProfile &profile,
                                PlayerId deviator, const MooreMachine &machine, Vertex v0);

/// Streams every positional profile exactly once (mixed-radix counter over
/// vertices ascending, successor slots ascending; the last vertex varies
/// fastest). Throws TooManyProfiles at construction when the out-degree
/// product exceeds the bound.
class PositionalProfileEnumerator {
public:
    explicit PositionalProfileEnumerator(const GameGraph &game,
                                         std::uint64_t bound = 1000000);

    std::uint64_t total() const { return total_; }
    std::optional<MooreProfile> next();

private:
    const GameGraph &game_;
    std::vector<int> counter_;
    std::uint64_t total_;
    bool done_ = false;
};

/// Classical backward induction on the unraveling of the game from v0, which
/// must be acyclic up to leaf self-loops and of depth at most `depth`
/// (otherwise NotATree). Ties break toward the ascending successor index.
MooreProfile backward_induction_tree(const GameGraph &game, Vertex v0, int depth);

} // namespace wspe

#endif
