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

#ifndef WSPE_GRAPH_HPP
#define WSPE_GRAPH_HPP

#include <vector>

#include "wspe/game.hpp"

namespace wspe {

/// Strongly connected components. Components partition the (restricted)
/// vertex set; a component is bottom iff no edge leaves it.
struct SccDecomposition {
    std::vector<int> component_of;             // -1 for vertices outside the restriction
    std::vector<std::vector<Vertex>> components; // each sorted ascending
    std::vector<bool> is_bottom;

    std::vector<int> bottom_ids() const;
};

/// Tarjan with deterministic root order (ascending vertex index); component
/// ids follow completion order. `within`, when given, restricts the graph to
/// the induced subgraph on that mask.
SccDecomposition compute_sccs(const GameGraph &game, const std::vector<bool> *within = nullptr);

inline SccDecomposition bottom_sccs(const GameGraph &game) { return compute_sccs(game); }

/// Least fixpoint of: add v if its owner is controlling and some successor is
/// inside, or its owner is not controlling and all successors are inside.
/// `within` restricts edges to the induced subgraph.
std::vector<bool> attractor(const GameGraph &game, const std::vector<bool> &target,
                            const std::vector<bool> &controlling,
                            const std::vector<bool> *within = nullptr);

/// All v in `allowed` with a path (possibly empty) to `targets` staying
/// inside `allowed`. Requires targets ⊆ allowed.
std::vector<bool> backward_reach_within(const GameGraph &game, const std::vector<bool> &allowed,
                                        const std::vector<bool> &targets);

/// A simple cycle inside the component, deterministic: the lexicographically
/// smallest vertex-index sequence among minimum-length simple cycles, written
/// from its smallest vertex. Throws NoCycle for a singleton without self-loop.
Lasso smallest_simple_cycle(const GameGraph &game, const std::vector<Vertex> &component);

} // namespace wspe

#endif
