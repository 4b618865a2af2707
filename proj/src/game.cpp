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

#include "wspe/game.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wspe {

const char *error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::SinkVertex: return "SinkVertex";
    case ErrorCode::LeafWithExtraEdge: return "LeafWithExtraEdge";
    case ErrorCode::MissingLeafOutcome: return "MissingLeafOutcome";
    case ErrorCode::NonPermutationPreference: return "NonPermutationPreference";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::UndefinedOutcome: return "UndefinedOutcome";
    case ErrorCode::UnreachableLeaf: return "UnreachableLeaf";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::OutcomeMismatch: return "OutcomeMismatch";
    case ErrorCode::TooManyProfiles: return "TooManyProfiles";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::ProfileIncomplete: return "ProfileIncomplete";
    case ErrorCode::SemanticError: return "SemanticError";
    }
    return "UnknownError";
}

bool prefers(const PreferenceTable &prefs, PlayerId i, const Outcome &a, const Outcome &b) {
    if (a.symbolic() != b.symbolic())
        throw GameError(ErrorCode::KindMismatch, "cannot compare symbolic and payoff outcomes");
    if (a.symbolic()) {
        const auto &r = prefs.rank.at(i);
        return r.at(a.sym) < r.at(b.sym);
    }
    return a.payoff.at(i) < b.payoff.at(i);
}

std::vector<Vertex> primitive_cycle(const std::vector<Vertex> &cycle) {
    const int n = static_cast<int>(cycle.size());
    for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (int k = p; k < n && periodic; ++k)
            periodic = cycle[k] == cycle[k - p];
        if (periodic) return std::vector<Vertex>(cycle.begin(), cycle.begin() + p);
    }
    return cycle;
}

std::vector<Vertex> canonical_rotation(const std::vector<Vertex> &cycle) {
    const int n = static_cast<int>(cycle.size());
    if (n <= 1) return cycle;
    std::vector<Vertex> best;
    for (int s = 0; s < n; ++s) {
        if (cycle[s] != *std::min_element(cycle.begin(), cycle.end())) continue;
        std::vector<Vertex> rot(n);
        for (int k = 0; k < n; ++k) rot[k] = cycle[(s + k) % n];
        if (best.empty() || rot < best) best = rot;
    }
    return best;
}

int GameGraph::edge_index(Vertex from, Vertex to) const {
    const auto &s = succ[from];
    auto it = std::lower_bound(s.begin(), s.end(), to);
    if (it == s.end() || *it != to) return -1;
    return edge_offset[from] + static_cast<int>(it - s.begin());
}

std::optional<Vertex> GameGraph::vertex_by_name(const std::string &name) const {
    for (Vertex v = 0; v < num_vertices(); ++v)
        if (vertex_names[v] == name) return v;
    return std::nullopt;
}

namespace {

int require_player(const GameGraph &g, const std::string &name) {
    for (int i = 0; i < g.num_players(); ++i)
        if (g.players[i] == name) return i;
    throw GameError(ErrorCode::SemanticError, "unknown player '" + name + "'");
}

int require_vertex(const GameGraph &g, const std::string &name) {
    auto v = g.vertex_by_name(name);
    if (!v) throw GameError(ErrorCode::DanglingEdge, "unknown vertex '" + name + "'");
    return *v;
}

int require_outcome(const GameGraph &g, const std::string &name) {
    for (int o = 0; o < static_cast<int>(g.outcome_names.size()); ++o)
        if (g.outcome_names[o] == name) return o;
    throw GameError(ErrorCode::SemanticError, "unknown outcome '" + name + "'");
}

} // namespace

GameGraph build_game(const GameDesc &desc) {
    GameGraph g;
    if (desc.players.empty())
        throw GameError(ErrorCode::SemanticError, "no players declared");
    g.players = desc.players;
    {
        std::set<std::string> seen(desc.players.begin(), desc.players.end());
        if (seen.size() != desc.players.size())
            throw GameError(ErrorCode::SemanticError, "duplicate player name");
    }
    g.spec = desc.spec;
    g.parity_max = desc.parity_max;
    g.parity_odd = desc.parity_odd;

    const int np = g.num_players();
    const bool weighted = g.spec == SpecKind::MeanPayoff || g.spec == SpecKind::Limsup;

    if (g.spec == SpecKind::Leaf) {
        if (desc.outcomes.empty())
            throw GameError(ErrorCode::SemanticError, "leaf spec requires an outcomes block");
        g.outcome_names = desc.outcomes;
        std::set<std::string> seen(desc.outcomes.begin(), desc.outcomes.end());
        if (seen.size() != desc.outcomes.size())
            throw GameError(ErrorCode::SemanticError, "duplicate outcome name");
        // Each preference line must be a permutation of the declared outcomes.
        if (static_cast<int>(desc.prefer.size()) != np)
            throw GameError(ErrorCode::NonPermutationPreference,
                            "expected one preference order per player");
        g.prefs.rank.assign(np, std::vector<int>(desc.outcomes.size(), -1));
        for (int i = 0; i < np; ++i) {
            if (desc.prefer[i].size() != desc.outcomes.size())
                throw GameError(ErrorCode::NonPermutationPreference,
                                "preference order of player '" + g.players[i] +
                                    "' does not list every outcome exactly once");
            for (size_t pos = 0; pos < desc.prefer[i].size(); ++pos) {
                int o = require_outcome(g, desc.prefer[i][pos]);
                if (g.prefs.rank[i][o] != -1)
                    throw GameError(ErrorCode::NonPermutationPreference,
                                    "outcome '" + desc.prefer[i][pos] + "' repeated for player '" +
                                        g.players[i] + "'");
                g.prefs.rank[i][o] = static_cast<int>(pos);
            }
        }
    } else {
        if (!desc.outcomes.empty() || !desc.prefer.empty())
            throw GameError(ErrorCode::SemanticError,
                            "outcomes/prefer blocks are only valid with the leaf spec");
        if (!desc.cycles.empty())
            throw GameError(ErrorCode::SemanticError,
                            "cycle outcome overrides are only valid with the leaf spec");
    }

    const int nv = static_cast<int>(desc.vertices.size());
    if (nv == 0) throw GameError(ErrorCode::SemanticError, "no vertices declared");
    g.vertex_names.reserve(nv);
    for (const auto &vd : desc.vertices) g.vertex_names.push_back(vd.name);
    {
        std::set<std::string> seen(g.vertex_names.begin(), g.vertex_names.end());
        if (seen.size() != g.vertex_names.size())
            throw GameError(ErrorCode::SemanticError, "duplicate vertex name");
    }
    g.owner.resize(nv);
    g.priority.assign(nv, {});
    for (Vertex v = 0; v < nv; ++v) {
        g.owner[v] = require_player(g, desc.vertices[v].owner);
        if (g.spec == SpecKind::Parity) {
            if (static_cast<int>(desc.vertices[v].priority.size()) != np)
                throw GameError(ErrorCode::SemanticError,
                                "vertex '" + desc.vertices[v].name + "' needs one priority per player");
            g.priority[v] = desc.vertices[v].priority;
        } else if (!desc.vertices[v].priority.empty()) {
            throw GameError(ErrorCode::SemanticError, "priorities are only valid with the parity spec");
        }
    }

    // Edges. Declared leaves (vertices with a leaf outcome) get the self-loop
    // implicitly when they declare no edge at all.
    std::vector<std::map<Vertex, std::vector<Rational>>> out(nv);
    for (const auto &ed : desc.edges) {
        Vertex from = require_vertex(g, ed.from);
        Vertex to = require_vertex(g, ed.to);
        if (out[from].count(to))
            throw GameError(ErrorCode::SemanticError,
                            "duplicate edge " + ed.from + " -> " + ed.to);
        if (weighted) {
            if (static_cast<int>(ed.weights.size()) != np)
                throw GameError(ErrorCode::SemanticError,
                                "edge " + ed.from + " -> " + ed.to + " needs one weight per player");
        } else if (!ed.weights.empty()) {
            throw GameError(ErrorCode::SemanticError, "weights are only valid with weight specs");
        }
        out[from][to] = ed.weights;
    }
    for (Vertex v = 0; v < nv; ++v) {
        if (out[v].empty() && desc.vertices[v].leaf_outcome) {
            out[v][v] = weighted ? std::vector<Rational>(np, Rational(0)) : std::vector<Rational>{};
        }
        if (out[v].empty())
            throw GameError(ErrorCode::SinkVertex,
                            "vertex '" + g.vertex_names[v] + "' has no outgoing edge");
    }

    g.succ.assign(nv, {});
    g.weights.assign(nv, {});
    for (Vertex v = 0; v < nv; ++v) {
        for (const auto &[to, w] : out[v]) {
            g.succ[v].push_back(to);
            if (weighted) g.weights[v].push_back(w);
        }
    }
    g.edge_offset.assign(nv + 1, 0);
    for (Vertex v = 0; v < nv; ++v)
        g.edge_offset[v + 1] = g.edge_offset[v] + static_cast<int>(g.succ[v].size());
    g.pred.assign(nv, {});
    for (Vertex v = 0; v < nv; ++v)
        for (Vertex w : g.succ[v]) g.pred[w].push_back(v);

    // Leaves are structural: exactly one edge, the self-loop.
    g.leaf.assign(nv, false);
    for (Vertex v = 0; v < nv; ++v)
        g.leaf[v] = g.succ[v].size() == 1 && g.succ[v][0] == v;

    g.leaf_value.assign(nv, std::nullopt);
    for (Vertex v = 0; v < nv; ++v) {
        if (desc.vertices[v].leaf_outcome) {
            if (g.spec != SpecKind::Leaf)
                throw GameError(ErrorCode::SemanticError,
                                "leaf outcomes are only valid with the leaf spec");
            if (!g.leaf[v])
                throw GameError(ErrorCode::LeafWithExtraEdge,
                                "vertex '" + g.vertex_names[v] +
                                    "' declares a leaf outcome but is not a leaf");
            g.leaf_value[v] = Outcome::symbol(require_outcome(g, *desc.vertices[v].leaf_outcome));
        }
    }
    if (g.spec == SpecKind::Leaf) {
        for (Vertex v = 0; v < nv; ++v)
            if (g.leaf[v] && !g.leaf_value[v])
                throw GameError(ErrorCode::MissingLeafOutcome,
                                "leaf '" + g.vertex_names[v] + "' has no outcome");
    }

    if (desc.initial) g.initial = require_vertex(g, *desc.initial);

    for (const auto &cd : desc.cycles) {
        if (cd.cycle.empty())
            throw GameError(ErrorCode::SemanticError, "empty cycle override");
        std::vector<Vertex> cyc;
        for (const auto &name : cd.cycle) cyc.push_back(require_vertex(g, name));
        for (size_t k = 0; k < cyc.size(); ++k) {
            Vertex from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            if (!g.has_edge(from, to))
                throw GameError(ErrorCode::SemanticError,
                                "cycle override uses missing edge " + g.vertex_names[from] +
                                    " -> " + g.vertex_names[to]);
        }
        auto key = canonical_rotation(primitive_cycle(cyc));
        if (g.cycle_value.count(key))
            throw GameError(ErrorCode::SemanticError, "duplicate cycle override");
        g.cycle_value[key] = Outcome::symbol(require_outcome(g, cd.outcome));
    }

    return g;
}

void validate_lasso(const GameGraph &game, const Lasso &play) {
    if (play.cycle.empty())
        throw GameError(ErrorCode::SemanticError, "lasso has an empty cycle");
    auto check_vertex = [&](Vertex v) {
        if (v < 0 || v >= game.num_vertices())
            throw GameError(ErrorCode::SemanticError, "lasso vertex out of range");
    };
    for (Vertex v : play.prefix) check_vertex(v);
    for (Vertex v : play.cycle) check_vertex(v);
    auto check_edge = [&](Vertex a, Vertex b) {
        if (!game.has_edge(a, b))
            throw GameError(ErrorCode::SemanticError,
                            "lasso uses missing edge " + game.vertex_names[a] + " -> " +
                                game.vertex_names[b]);
    };
    for (size_t k = 0; k + 1 < play.prefix.size(); ++k)
        check_edge(play.prefix[k], play.prefix[k + 1]);
    if (!play.prefix.empty()) check_edge(play.prefix.back(), play.cycle.front());
    for (size_t k = 0; k < play.cycle.size(); ++k)
        check_edge(play.cycle[k], play.cycle[(k + 1) % play.cycle.size()]);
    if (primitive_cycle(play.cycle) != play.cycle)
        throw GameError(ErrorCode::SemanticError, "lasso cycle is not primitive");
}

Outcome outcome_of_lasso(const GameGraph &game, const Lasso &play) {
    validate_lasso(game, play);
    const auto &cyc = play.cycle;
    const int np = game.num_players();
    switch (game.spec) {
    case SpecKind::Leaf: {
        if (cyc.size() == 1 && game.leaf[cyc[0]]) return *game.leaf_value[cyc[0]];
        auto it = game.cycle_value.find(canonical_rotation(cyc));
        if (it != game.cycle_value.end()) return it->second;
        throw GameError(ErrorCode::UndefinedOutcome,
                        "cycle is not a leaf self-loop and has no declared outcome");
    }
    case SpecKind::MeanPayoff: {
        std::vector<Rational> sum(np, Rational(0));
        for (size_t k = 0; k < cyc.size(); ++k) {
            Vertex from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            int slot = game.edge_index(from, to) - game.edge_offset[from];
            for (int i = 0; i < np; ++i) sum[i] += game.weights[from][slot][i];
        }
        const Rational len(static_cast<long long>(cyc.size()));
        for (int i = 0; i < np; ++i) sum[i] /= len;
        return Outcome::vec(std::move(sum));
    }
    case SpecKind::Limsup: {
        std::vector<Rational> best(np);
        for (size_t k = 0; k < cyc.size(); ++k) {
            Vertex from = cyc[k], to = cyc[(k + 1) % cyc.size()];
            int slot = game.edge_index(from, to) - game.edge_offset[from];
            for (int i = 0; i < np; ++i) {
                const Rational &w = game.weights[from][slot][i];
                if (k == 0 || best[i] < w) best[i] = w;
            }
        }
        return Outcome::vec(std::move(best));
    }
    case SpecKind::Parity: {
        std::vector<Rational> win(np);
        for (int i = 0; i < np; ++i) {
            int best = game.priority[cyc[0]][i];
            for (Vertex v : cyc) {
                int p = game.priority[v][i];
                if (game.parity_max ? p > best : p < best) best = p;
            }
            bool even = best % 2 == 0;
            win[i] = Rational((even != game.parity_odd) ? 1 : 0);
        }
        return Outcome::vec(std::move(win));
    }
    }
    throw GameError(ErrorCode::SemanticError, "unknown spec kind");
}

std::string rational_to_string(const Rational &q) {
    std::ostringstream out;
    out << q.numerator();
    if (q.denominator() != 1) out << '/' << q.denominator();
    return out.str();
}

std::string outcome_to_string(const GameGraph &game, const Outcome &o) {
    if (o.symbolic()) return game.outcome_names.at(o.sym);
    std::string s = "(";
    for (size_t i = 0; i < o.payoff.size(); ++i) {
        if (i) s += ',';
        s += rational_to_string(o.payoff[i]);
    }
    return s + ")";
}

} // namespace wspe
