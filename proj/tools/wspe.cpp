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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wspe/fixpoint.hpp"
#include "wspe/game.hpp"
#include "wspe/io.hpp"
#include "wspe/synthesis.hpp"
#include "wspe/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1; // counterexample / not layered / nothing certified
constexpr int kExitInputError = 2;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

wspe::Vertex resolve_start(const wspe::GameGraph &game, const std::string &from_flag) {
    if (!from_flag.empty()) {
        auto v = game.vertex_by_name(from_flag);
        if (!v) throw std::runtime_error("unknown vertex '" + from_flag + "'");
        return *v;
    }
    if (game.initial) return *game.initial;
    throw std::runtime_error("no initial vertex: pass --from or declare one in the game file");
}

std::string describe_state(const wspe::GameGraph &game, const wspe::ProductState &s) {
    std::string out = game.vertex_names[s.vertex] + " [mem";
    for (int m : s.memory) out += " " + std::to_string(m);
    return out + "]";
}

void print_counterexample(const wspe::GameGraph &game, const wspe::Counterexample &cx) {
    std::cout << "counterexample: player " << game.players[cx.owner] << " at "
              << describe_state(game, cx.state) << " deviates to "
              << game.vertex_names[cx.edge_target] << ": "
              << wspe::outcome_to_string(game, cx.outcome_before) << " -> "
              << wspe::outcome_to_string(game, cx.outcome_after) << "\n";
}

int cmd_solve(const std::string &game_path, const std::string &from, const std::string &emit) {
    auto game = wspe::parse_game(read_file(game_path));
    wspe::Vertex v0 = resolve_start(game, from);
    auto profile = wspe::solve_weak_spe(game, v0);
    if (emit == "dot")
        std::cout << wspe::export_dot(game, &profile);
    else
        std::cout << wspe::print_profile(game, profile);
    return kExitOk;
}

int cmd_verify(const std::string &game_path, const std::string &profile_path,
               const std::string &from) {
    auto game = wspe::parse_game(read_file(game_path));
    auto profile = wspe::parse_profile(read_file(profile_path), game);
    wspe::Vertex v0 = resolve_start(game, from);
    auto verdict = wspe::check_very_weak_spe(game, profile, v0);
    if (verdict.ok()) {
        std::cout << "certified: weak SPE from " << game.vertex_names[v0] << "\n";
        return kExitOk;
    }
    print_counterexample(game, *verdict.counterexample);
    return kExitRefuted;
}

int cmd_fixpoint(const std::string &game_path, bool trace, bool invariants) {
    auto game = wspe::parse_game(read_file(game_path));
    auto collapse = wspe::collapse_to_leafed(game);
    const wspe::GameGraph &leafed = collapse.collapsed;
    wspe::FixpointOptions options;
    options.check_invariants = invariants;
    auto result = wspe::run_fixpoint(leafed, options);
    if (trace) {
        auto initial = wspe::initial_labeling(leafed, result.info);
        std::cout << wspe::trace_tsv(leafed, result.info, initial, result.trace);
    } else {
        std::cout << "fixpoint after " << result.trace.converged_step << " steps\n";
        for (wspe::Vertex v = 0; v < leafed.num_vertices(); ++v)
            std::cout << leafed.vertex_names[v] << '\t'
                      << wspe::label_set_to_string(leafed, result.info, result.labeling.label[v])
                      << '\n';
    }
    return kExitOk;
}

int cmd_layers(const std::string &game_path) {
    auto game = wspe::parse_game(read_file(game_path));
    auto sccs = wspe::compute_sccs(game);
    std::vector<wspe::Outcome> outcomes;
    for (int c : sccs.bottom_ids())
        outcomes.push_back(
            wspe::uniform_profile_for_scc(game, sccs.components[c]).outcome);
    auto result = wspe::check_layered(game, outcomes);
    if (std::holds_alternative<wspe::BadPattern>(result)) {
        const auto &w = std::get<wspe::BadPattern>(result);
        std::cout << "not layered: players " << game.players[w.i] << "/" << game.players[w.i2]
                  << " o=" << wspe::outcome_to_string(game, w.o)
                  << " p=" << wspe::outcome_to_string(game, w.p)
                  << " q=" << wspe::outcome_to_string(game, w.q) << "\n";
        return kExitRefuted;
    }
    const auto &partition = std::get<wspe::LayerPartition>(result);
    for (size_t k = 0; k < partition.blocks.size(); ++k) {
        std::cout << "layer " << k << ":";
        for (const auto &o : partition.blocks[k])
            std::cout << ' ' << wspe::outcome_to_string(game, o);
        std::cout << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const std::string &game_path, const std::string &mode, const std::string &from,
               int depth, std::uint64_t bound) {
    auto game = wspe::parse_game(read_file(game_path));
    wspe::Vertex v0 = resolve_start(game, from);
    if (mode == "positional-exhaustion") {
        wspe::PositionalProfileEnumerator en(game, bound);
        std::uint64_t index = 0, certified = 0;
        while (auto profile = en.next()) {
            auto verdict = wspe::check_very_weak_spe(game, *profile, v0);
            std::cout << "profile " << index << ": ";
            if (verdict.ok()) {
                ++certified;
                std::cout << "certified\n";
            } else {
                const auto &cx = *verdict.counterexample;
                std::cout << "counterexample player " << game.players[cx.owner] << " at "
                          << describe_state(game, cx.state) << " -> "
                          << game.vertex_names[cx.edge_target] << "\n";
            }
            ++index;
        }
        std::cout << "certified " << certified << "/" << en.total() << "\n";
        return certified > 0 ? kExitOk : kExitRefuted;
    }
    if (mode == "tree-backward-induction") {
        auto profile = wspe::backward_induction_tree(game, v0, depth);
        std::cout << wspe::print_profile(game, profile);
        auto verdict = wspe::check_very_weak_spe(game, profile, v0);
        if (verdict.ok()) {
            std::cout << "certified: weak SPE from " << game.vertex_names[v0] << "\n";
            return kExitOk;
        }
        print_counterexample(game, *verdict.counterexample);
        return kExitRefuted;
    }
    throw std::runtime_error("unknown oracle mode '" + mode + "'");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"weak subgame-perfect equilibrium solver and verifier"};
    app.require_subcommand(1);

    std::string game_path, profile_path, from, emit = "profile", mode;
    bool trace = false, invariants = false;
    int depth = 64;
    std::uint64_t bound = 1000000;

    auto *solve = app.add_subcommand("solve", "synthesize a weak SPE profile");
    solve->add_option("file", game_path, "game file")->required();
    solve->add_option("--from", from, "initial vertex");
    solve->add_option("--emit", emit, "output kind: profile|dot")
        ->check(CLI::IsMember({"profile", "dot"}));

    auto *verify = app.add_subcommand("verify", "one-shot-deviation check of a profile");
    verify->add_option("file", game_path, "game file")->required();
    verify->add_option("--profile", profile_path, "profile file")->required();
    verify->add_option("--from", from, "initial vertex");

    auto *fixpoint = app.add_subcommand("fixpoint", "run the Remove/Adjust labeling");
    fixpoint->add_option("file", game_path, "game file")->required();
    fixpoint->add_flag("--trace", trace, "emit the per-step TSV table");
    fixpoint->add_flag("--check-invariants", invariants, "assert INV1-INV3 after every step");

    auto *layers = app.add_subcommand("layers", "layer partition of bottom-component outcomes");
    layers->add_option("file", game_path, "game file")->required();

    auto *oracle = app.add_subcommand("oracle", "brute-force oracles");
    oracle->add_option("file", game_path, "game file")->required();
    oracle->add_option("--mode", mode, "positional-exhaustion|tree-backward-induction")
        ->required()
        ->check(CLI::IsMember({"positional-exhaustion", "tree-backward-induction"}));
    oracle->add_option("--from", from, "initial vertex");
    oracle->add_option("--depth", depth, "tree depth bound");
    oracle->add_option("--bound", bound, "positional profile bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (solve->parsed()) return cmd_solve(game_path, from, emit);
        if (verify->parsed()) return cmd_verify(game_path, profile_path, from);
        if (fixpoint->parsed()) return cmd_fixpoint(game_path, trace, invariants);
        if (layers->parsed()) return cmd_layers(game_path);
        if (oracle->parsed()) return cmd_oracle(game_path, mode, from, depth, bound);
    } catch (const wspe::NotLayeredError &e) {
        std::cerr << e.what() << "\n";
        return kExitRefuted;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
