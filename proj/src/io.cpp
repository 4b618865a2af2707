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

#include "wspe/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace wspe {

namespace {

struct Token {
    std::string text;
    int col; // 1-based
};

struct Line {
    int number; // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(const std::string &text) {
    std::vector<Line> lines;
    int lineno = 0;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        Line line{lineno, {}};
        size_t pos = 0;
        while (pos < raw.size()) {
            while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            if (pos >= raw.size()) break;
            size_t start = pos;
            while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
            line.tokens.push_back({raw.substr(start, pos - start), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

class LineReader {
public:
    LineReader(const Line &line) : line_(line) {}

    bool done() const { return next_ >= line_.tokens.size(); }
    int end_col() const {
        return line_.tokens.empty() ? 1 : line_.tokens.back().col +
                                              static_cast<int>(line_.tokens.back().text.size());
    }

    const Token &peek() const { return line_.tokens[next_]; }

    std::string word(const char *what) {
        if (done()) throw SyntaxError(line_.number, end_col(), what);
        return line_.tokens[next_++].text;
    }

    long long integer(const char *what) {
        std::string t = word(what);
        long long value = 0;
        auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc() || p != t.data() + t.size())
            throw SyntaxError(line_.number, last_col(), what);
        return value;
    }

    Rational rational(const char *what) {
        std::string t = word(what);
        auto slash = t.find('/');
        auto parse_ll = [&](const std::string &s) {
            long long value = 0;
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc() || p != s.data() + s.size())
                throw SyntaxError(line_.number, last_col(), what);
            return value;
        };
        if (slash == std::string::npos) return Rational(parse_ll(t));
        long long num = parse_ll(t.substr(0, slash));
        long long den = parse_ll(t.substr(slash + 1));
        if (den == 0) throw SyntaxError(line_.number, last_col(), "nonzero denominator");
        return Rational(num, den);
    }

    void finish(const char *what) {
        if (!done()) throw SyntaxError(line_.number, peek().col, what);
    }

    int last_col() const { return line_.tokens[next_ - 1].col; }
    int number() const { return line_.number; }

private:
    const Line &line_;
    size_t next_ = 0;
};

} // namespace

GameGraph parse_game(const std::string &text) {
    GameDesc desc;
    bool saw_spec = false;
    for (const Line &line : tokenize(text)) {
        LineReader r(line);
        std::string head = r.word("directive");
        if (head == "players") {
            while (!r.done()) desc.players.push_back(r.word("player name"));
            if (desc.players.empty()) throw SyntaxError(r.number(), r.end_col(), "player name");
        } else if (head == "spec") {
            saw_spec = true;
            std::string kind = r.word("spec kind");
            if (kind == "leaf") desc.spec = SpecKind::Leaf;
            else if (kind == "mean-payoff") desc.spec = SpecKind::MeanPayoff;
            else if (kind == "limsup") desc.spec = SpecKind::Limsup;
            else if (kind == "parity") {
                desc.spec = SpecKind::Parity;
                while (!r.done()) {
                    std::string opt = r.word("parity option");
                    if (opt == "max") desc.parity_max = true;
                    else if (opt == "min") desc.parity_max = false;
                    else if (opt == "odd") desc.parity_odd = true;
                    else if (opt == "even") desc.parity_odd = false;
                    else throw SyntaxError(r.number(), r.last_col(), "min|max|even|odd");
                }
            } else {
                throw SyntaxError(r.number(), r.last_col(), "leaf|mean-payoff|limsup|parity");
            }
            r.finish("end of line");
        } else if (head == "outcomes") {
            while (!r.done()) desc.outcomes.push_back(r.word("outcome name"));
            if (desc.outcomes.empty()) throw SyntaxError(r.number(), r.end_col(), "outcome name");
        } else if (head == "prefer") {
            std::string player = r.word("player name");
            std::vector<std::string> order;
            while (!r.done()) order.push_back(r.word("outcome name"));
            size_t idx = desc.players.size();
            for (size_t i = 0; i < desc.players.size(); ++i)
                if (desc.players[i] == player) idx = i;
            if (idx == desc.players.size())
                throw GameError(ErrorCode::SemanticError, "unknown player '" + player + "'");
            if (desc.prefer.size() <= idx) desc.prefer.resize(idx + 1);
            if (!desc.prefer[idx].empty())
                throw GameError(ErrorCode::SemanticError,
                                "duplicate preference order for player '" + player + "'");
            desc.prefer[idx] = std::move(order);
        } else if (head == "vertex") {
            GameDesc::VertexDesc vd;
            vd.name = r.word("vertex name");
            vd.owner = r.word("owner");
            while (!r.done()) {
                std::string opt = r.word("leaf|priorities");
                if (opt == "leaf") {
                    vd.leaf_outcome = r.word("outcome name");
                } else if (opt == "priorities") {
                    while (!r.done())
                        vd.priority.push_back(static_cast<int>(r.integer("priority")));
                } else {
                    throw SyntaxError(r.number(), r.last_col(), "leaf|priorities");
                }
            }
            desc.vertices.push_back(std::move(vd));
        } else if (head == "edge") {
            GameDesc::EdgeDesc ed;
            ed.from = r.word("vertex name");
            ed.to = r.word("vertex name");
            if (!r.done()) {
                std::string opt = r.word("weights");
                if (opt != "weights") throw SyntaxError(r.number(), r.last_col(), "weights");
                while (!r.done()) ed.weights.push_back(r.rational("weight"));
            }
            desc.edges.push_back(std::move(ed));
        } else if (head == "initial") {
            desc.initial = r.word("vertex name");
            r.finish("end of line");
        } else if (head == "cycle") {
            GameDesc::CycleDesc cd;
            std::vector<std::string> toks;
            while (!r.done()) toks.push_back(r.word("vertex name"));
            // trailing "outcome <name>"
            if (toks.size() < 3 || toks[toks.size() - 2] != "outcome")
                throw SyntaxError(r.number(), r.end_col(), "cycle <v...> outcome <o>");
            cd.outcome = toks.back();
            toks.resize(toks.size() - 2);
            cd.cycle = std::move(toks);
            desc.cycles.push_back(std::move(cd));
        } else {
            throw SyntaxError(line.number, line.tokens[0].col,
                              "players|spec|outcomes|prefer|vertex|edge|initial|cycle");
        }
    }
    if (!saw_spec) throw SyntaxError(1, 1, "spec directive");
    return build_game(desc);
}

std::string print_game(const GameGraph &g) {
    std::ostringstream out;
    out << "players";
    for (const auto &p : g.players) out << ' ' << p;
    out << '\n';
    switch (g.spec) {
    case SpecKind::Leaf: out << "spec leaf\n"; break;
    case SpecKind::MeanPayoff: out << "spec mean-payoff\n"; break;
    case SpecKind::Limsup: out << "spec limsup\n"; break;
    case SpecKind::Parity:
        out << "spec parity " << (g.parity_max ? "max" : "min") << ' '
            << (g.parity_odd ? "odd" : "even") << '\n';
        break;
    }
    if (!g.outcome_names.empty()) {
        out << "outcomes";
        for (const auto &o : g.outcome_names) out << ' ' << o;
        out << '\n';
        for (PlayerId i = 0; i < g.num_players(); ++i) {
            out << "prefer " << g.players[i];
            std::vector<int> order(g.outcome_names.size());
            for (size_t o = 0; o < order.size(); ++o) order[g.prefs.rank[i][o]] = static_cast<int>(o);
            for (int o : order) out << ' ' << g.outcome_names[o];
            out << '\n';
        }
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "vertex " << g.vertex_names[v] << ' ' << g.players[g.owner[v]];
        if (g.leaf_value[v] && g.leaf_value[v]->symbolic())
            out << " leaf " << g.outcome_names[g.leaf_value[v]->sym];
        if (g.spec == SpecKind::Parity) {
            out << " priorities";
            for (int p : g.priority[v]) out << ' ' << p;
        }
        out << '\n';
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (size_t slot = 0; slot < g.succ[v].size(); ++slot) {
            out << "edge " << g.vertex_names[v] << ' ' << g.vertex_names[g.succ[v][slot]];
            if (!g.weights[v].empty()) {
                out << " weights";
                for (const auto &w : g.weights[v][slot]) out << ' ' << rational_to_string(w);
            }
            out << '\n';
        }
    }
    if (g.initial) out << "initial " << g.vertex_names[*g.initial] << '\n';
    for (const auto &[cyc, val] : g.cycle_value) {
        out << "cycle";
        for (Vertex v : cyc) out << ' ' << g.vertex_names[v];
        out << " outcome " << g.outcome_names[val.sym] << '\n';
    }
    return out.str();
}

MooreProfile parse_profile(const std::string &text, const GameGraph &game) {
    MooreProfile profile;
    profile.machines.resize(game.num_players());
    std::vector<bool> declared(game.num_players(), false);
    auto player_of = [&](const std::string &name, const LineReader &r) {
        for (PlayerId i = 0; i < game.num_players(); ++i)
            if (game.players[i] == name) return i;
        throw SyntaxError(r.number(), r.last_col(), "player name");
    };
    auto vertex_of = [&](const std::string &name, const LineReader &r) {
        auto v = game.vertex_by_name(name);
        if (!v) throw SyntaxError(r.number(), r.last_col(), "vertex name");
        return *v;
    };
    auto machine_of = [&](PlayerId i, const LineReader &r) -> MooreMachine & {
        if (!declared[i]) throw SyntaxError(r.number(), 1, "machine declared before use");
        return profile.machines[i];
    };
    auto state_of = [&](const MooreMachine &m, long long s, const LineReader &r) {
        if (s < 0 || s >= m.states) throw SyntaxError(r.number(), r.last_col(), "state index");
        return static_cast<int>(s);
    };
    bool saw_header = false;
    for (const Line &line : tokenize(text)) {
        LineReader r(line);
        std::string head = r.word("directive");
        if (head == "profile") {
            saw_header = true;
            r.finish("end of line");
        } else if (head == "machine") {
            PlayerId i = player_of(r.word("player name"), r);
            if (r.word("states") != "states") throw SyntaxError(r.number(), r.last_col(), "states");
            long long states = r.integer("state count");
            if (r.word("initial") != "initial")
                throw SyntaxError(r.number(), r.last_col(), "initial");
            long long initial = r.integer("initial state");
            r.finish("end of line");
            if (states <= 0 || initial < 0 || initial >= states)
                throw SyntaxError(r.number(), r.last_col(), "valid machine header");
            MooreMachine m;
            m.player = i;
            m.states = static_cast<int>(states);
            m.initial = static_cast<int>(initial);
            m.next_move.assign(m.states, std::vector<Vertex>(game.num_vertices(), -1));
            m.update.assign(m.states, std::vector<int>(game.num_edges(), 0));
            for (int s = 0; s < m.states; ++s)
                for (int e = 0; e < game.num_edges(); ++e) m.update[s][e] = s;
            profile.machines[i] = std::move(m);
            declared[i] = true;
        } else if (head == "move") {
            PlayerId i = player_of(r.word("player name"), r);
            MooreMachine &m = machine_of(i, r);
            int s = state_of(m, r.integer("state"), r);
            Vertex v = vertex_of(r.word("vertex name"), r);
            Vertex t = vertex_of(r.word("vertex name"), r);
            r.finish("end of line");
            if (!game.has_edge(v, t)) throw SyntaxError(r.number(), r.last_col(), "edge target");
            m.next_move[s][v] = t;
        } else if (head == "update") {
            PlayerId i = player_of(r.word("player name"), r);
            MooreMachine &m = machine_of(i, r);
            int s = state_of(m, r.integer("state"), r);
            Vertex from = vertex_of(r.word("vertex name"), r);
            Vertex to = vertex_of(r.word("vertex name"), r);
            int next = state_of(m, r.integer("next state"), r);
            r.finish("end of line");
            int e = game.edge_index(from, to);
            if (e < 0) throw SyntaxError(r.number(), r.last_col(), "existing edge");
            m.update[s][e] = next;
        } else {
            throw SyntaxError(line.number, line.tokens[0].col, "profile|machine|move|update");
        }
    }
    if (!saw_header) throw SyntaxError(1, 1, "profile header");
    for (PlayerId i = 0; i < game.num_players(); ++i)
        if (!declared[i])
            throw GameError(ErrorCode::ProfileIncomplete,
                            "no machine for player '" + game.players[i] + "'");
    return profile;
}

std::string print_profile(const GameGraph &game, const MooreProfile &profile) {
    std::ostringstream out;
    out << "profile\n";
    for (PlayerId i = 0; i < game.num_players(); ++i) {
        const MooreMachine &m = profile.machines[i];
        out << "machine " << game.players[i] << " states " << m.states << " initial " << m.initial
            << '\n';
        for (int s = 0; s < m.states; ++s)
            for (Vertex v = 0; v < game.num_vertices(); ++v)
                if (game.owner[v] == i && m.next_move[s][v] >= 0)
                    out << "move " << game.players[i] << ' ' << s << ' ' << game.vertex_names[v]
                        << ' ' << game.vertex_names[m.next_move[s][v]] << '\n';
        for (int s = 0; s < m.states; ++s)
            for (Vertex v = 0; v < game.num_vertices(); ++v)
                for (size_t slot = 0; slot < game.succ[v].size(); ++slot) {
                    int e = game.edge_offset[v] + static_cast<int>(slot);
                    if (m.update[s][e] != s)
                        out << "update " << game.players[i] << ' ' << s << ' '
                            << game.vertex_names[v] << ' ' << game.vertex_names[game.succ[v][slot]]
                            << ' ' << m.update[s][e] << '\n';
                }
    }
    return out.str();
}

std::string label_set_to_string(const GameGraph &game, const LeafedGameInfo &info,
                                const std::set<int> &label) {
    std::string s = "{";
    bool first = true;
    for (int o : label) {
        if (!first) s += ',';
        s += outcome_to_string(game, info.outcomes[o]);
        first = false;
    }
    return s + "}";
}

std::string trace_tsv(const GameGraph &game, const LeafedGameInfo &info, const Labeling &initial,
                      const FixpointTrace &trace) {
    std::ostringstream out;
    out << "step";
    for (Vertex v = 0; v < game.num_vertices(); ++v) out << '\t' << game.vertex_names[v];
    out << '\n';
    Labeling lab = initial;
    auto row = [&](int step) {
        out << step;
        for (Vertex v = 0; v < game.num_vertices(); ++v)
            out << '\t' << label_set_to_string(game, info, lab.label[v]);
        out << '\n';
    };
    row(0);
    int step = 0;
    for (const auto &event : trace.events) {
        if (event.kind == FixpointTrace::Event::Remove) {
            lab.label[event.removed.v].erase(event.removed.outcome);
        } else {
            for (const auto &pair : event.adjusted) lab.label[pair.v].erase(pair.outcome);
        }
        row(++step);
    }
    return out.str();
}

std::string export_dot(const GameGraph &game, const MooreProfile *profile,
                       const Labeling *labeling, const LeafedGameInfo *info) {
    static const char *shapes[] = {"circle", "box", "diamond", "hexagon",
                                   "ellipse", "octagon", "trapezium", "house"};
    std::ostringstream out;
    out << "digraph game {\n  rankdir=LR;\n";
    for (Vertex v = 0; v < game.num_vertices(); ++v) {
        out << "  \"" << game.vertex_names[v] << "\" [shape=" << shapes[game.owner[v] % 8];
        std::string label = game.vertex_names[v];
        if (game.leaf_value[v]) label += "\\n" + outcome_to_string(game, *game.leaf_value[v]);
        if (labeling && info) label += "\\n" + label_set_to_string(game, *info, labeling->label[v]);
        out << " label=\"" << label << "\"";
        if (game.leaf[v]) out << " peripheries=2";
        out << "];\n";
    }
    for (Vertex v = 0; v < game.num_vertices(); ++v) {
        for (size_t slot = 0; slot < game.succ[v].size(); ++slot) {
            Vertex w = game.succ[v][slot];
            out << "  \"" << game.vertex_names[v] << "\" -> \"" << game.vertex_names[w] << "\"";
            std::vector<std::string> attrs;
            if (profile) {
                const MooreMachine &m = profile->machines[game.owner[v]];
                if (m.next_move[m.initial][v] == w) attrs.push_back("penwidth=2");
            }
            if (!game.weights[v].empty()) {
                std::string wl;
                for (size_t i = 0; i < game.weights[v][slot].size(); ++i) {
                    if (i) wl += ',';
                    wl += rational_to_string(game.weights[v][slot][i]);
                }
                attrs.push_back("label=\"" + wl + "\"");
            }
            if (!attrs.empty()) {
                out << " [";
                for (size_t k = 0; k < attrs.size(); ++k) out << (k ? " " : "") << attrs[k];
                out << "]";
            }
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace wspe
