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

#ifndef WSPE_IO_HPP
#define WSPE_IO_HPP

#include <string>

#include "wspe/fixpoint.hpp"
#include "wspe/game.hpp"
#include "wspe/strategy.hpp"

namespace wspe {

/// Parses the game description format (see README). Throws SyntaxError with
/// line/column on malformed input; name resolution and structural validation
/// errors come from build_game.
GameGraph parse_game(const std::string &text);

/// Canonical text form; parse_game(print_game(g)) == g.
std::string print_game(const GameGraph &game);

/// Profile file format: per player a `machine` header followed by `move`
/// rows (state, vertex, target) and sparse `update` rows (state, from, to,
/// next state; omitted rows keep the state).
MooreProfile parse_profile(const std::string &text, const GameGraph &game);
std::string print_profile(const GameGraph &game, const MooreProfile &profile);

/// Deterministic DOT rendering; prescribed moves of the profile's initial
/// memory are drawn bold, labeling sets annotate the vertices.
std::string export_dot(const GameGraph &game, const MooreProfile *profile = nullptr,
                       const Labeling *labeling = nullptr,
                       const LeafedGameInfo *info = nullptr);

/// One set cell of a trace row: sorted outcome list in braces.
std::string label_set_to_string(const GameGraph &game, const LeafedGameInfo &info,
                                const std::set<int> &label);

/// Step table in TSV: header `step <v...>`, one row per step from 0 to the
/// convergence step, cells as brace sets. Reconstructed by replaying the
/// trace events on the initial labeling.
std::string trace_tsv(const GameGraph &game, const LeafedGameInfo &info,
                      const Labeling &initial, const FixpointTrace &trace);

} // namespace wspe

#endif
