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

#include "wspe/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace wspe {

std::vector<int> SccDecomposition::bottom_ids() const {
    std::vector<int> ids;
    for (int c = 0; c < static_cast<int>(components.size()); ++c)
        if (is_bottom[c]) ids.push_back(c);
    return ids;
}

namespace {

struct TarjanState {
    const GameGraph &g;
    const std::vector<bool> *within;
    std::vector<int> index, lowlink, stack_pos;
    std::vector<Vertex> stack;
    int next_index = 0;
    SccDecomposition out;

    explicit TarjanState(const GameGraph &game, const std::vector<bool> *mask)
        : g(game), within(mask), index(game.num_vertices(), -1),
          lowlink(game.num_vertices(), -1), stack_pos(game.num_vertices(), -1) {
        out.component_of.assign(game.num_vertices(), -1);
    }

    bool inside(Vertex v) const { return !within || (*within)[v]; }

    // Iterative Tarjan; frame holds the next successor slot to explore.
    void run(Vertex root) {
        std::vector<std::pair<Vertex, size_t>> frames{{root, 0}};
        open(root);
        while (!frames.empty()) {
            auto &[v, slot] = frames.back();
            if (slot < g.succ[v].size()) {
                Vertex w = g.succ[v][slot++];
                if (!inside(w)) continue;
                if (index[w] == -1) {
                    open(w);
                    frames.emplace_back(w, 0);
                } else if (stack_pos[w] != -1) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) close(v);
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().first] = std::min(lowlink[frames.back().first], lowlink[v]);
            }
        }
    }

    void open(Vertex v) {
        index[v] = lowlink[v] = next_index++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
    }

    void close(Vertex v) {
        int id = static_cast<int>(out.components.size());
        std::vector<Vertex> comp(stack.begin() + stack_pos[v], stack.end());
        stack.resize(stack_pos[v]);
        std::sort(comp.begin(), comp.end());
        for (Vertex w : comp) {
            stack_pos[w] = -1;
            out.component_of[w] = id;
        }
        out.components.push_back(std::move(comp));
    }
};

} // namespace

SccDecomposition compute_sccs(const GameGraph &game, const std::vector<bool> *within) {
    TarjanState t(game, within);
    for (Vertex v = 0; v < game.num_vertices(); ++v)
        if (t.inside(v) && t.index[v] == -1) t.run(v);
    auto &out = t.out;
    out.is_bottom.assign(out.components.size(), true);
    for (Vertex v = 0; v < game.num_vertices(); ++v) {
        if (!t.inside(v)) continue;
        for (Vertex w : game.succ[v])
            if (t.inside(w) && out.component_of[w] != out.component_of[v])
                out.is_bottom[out.component_of[v]] = false;
    }
    return out;
}

std::vector<bool> attractor(const GameGraph &game, const std::vector<bool> &target,
                            const std::vector<bool> &controlling,
                            const std::vector<bool> *within) {
    const int nv = game.num_vertices();
    auto inside = [&](Vertex v) { return !within || (*within)[v]; };
    std::vector<bool> in(nv, false);
    std::vector<int> missing(nv, 0); // uncontrolled vertices: successors still outside
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < nv; ++v) {
        if (!inside(v)) continue;
        if (target[v]) {
            in[v] = true;
            queue.push_back(v);
        } else if (!controlling[game.owner[v]]) {
            for (Vertex w : game.succ[v])
                if (inside(w)) ++missing[v];
        }
    }
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for (Vertex v : game.pred[w]) {
            if (!inside(v) || in[v]) continue;
            if (controlling[game.owner[v]]) {
                in[v] = true;
                queue.push_back(v);
            } else if (--missing[v] == 0) {
                in[v] = true;
                queue.push_back(v);
            }
        }
    }
    return in;
}

std::vector<bool> backward_reach_within(const GameGraph &game, const std::vector<bool> &allowed,
                                        const std::vector<bool> &targets) {
    const int nv = game.num_vertices();
    std::vector<bool> in(nv, false);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < nv; ++v) {
        if (targets[v]) {
            in[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for (Vertex v : game.pred[w])
            if (allowed[v] && !in[v]) {
                in[v] = true;
                queue.push_back(v);
            }
    }
    return in;
}

namespace {

// BFS distances to `to` inside the component (distance 0 at `to`).
std::vector<int> distances_to(const GameGraph &game, const std::vector<bool> &in_comp, Vertex to) {
    std::vector<int> dist(game.num_vertices(), std::numeric_limits<int>::max());
    dist[to] = 0;
    std::deque<Vertex> queue{to};
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for (Vertex v : game.pred[w])
            if (in_comp[v] && dist[v] > dist[w] + 1) {
                dist[v] = dist[w] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

// Ascending-successor DFS for a simple cycle of exact length `len` from `start`
// back to `start`; the first hit is the lexicographically smallest one.
bool lex_cycle_dfs(const GameGraph &game, const std::vector<bool> &in_comp,
                   const std::vector<int> &dist_back, Vertex start, int len,
                   std::vector<Vertex> &path, std::vector<bool> &visited) {
    Vertex v = path.back();
    int at = static_cast<int>(path.size());
    for (Vertex w : game.succ[v]) {
        if (!in_comp[w]) continue;
        if (w == start && at == len) return true;
        if (visited[w] || at >= len) continue;
        if (dist_back[w] > len - at) continue;
        visited[w] = true;
        path.push_back(w);
        if (lex_cycle_dfs(game, in_comp, dist_back, start, len, path, visited)) return true;
        path.pop_back();
        visited[w] = false;
    }
    return false;
}

} // namespace

Lasso smallest_simple_cycle(const GameGraph &game, const std::vector<Vertex> &comp_in) {
    std::vector<Vertex> component = comp_in;
    std::sort(component.begin(), component.end());
    std::vector<bool> in_comp(game.num_vertices(), false);
    for (Vertex v : component) in_comp[v] = true;

    int best_len = std::numeric_limits<int>::max();
    std::vector<std::vector<int>> dist_back(component.size());
    for (size_t k = 0; k < component.size(); ++k) {
        Vertex u = component[k];
        dist_back[k] = distances_to(game, in_comp, u);
        int len = std::numeric_limits<int>::max();
        for (Vertex w : game.succ[u])
            if (in_comp[w] && dist_back[k][w] != std::numeric_limits<int>::max())
                len = std::min(len, 1 + dist_back[k][w]);
        best_len = std::min(best_len, len);
    }
    if (best_len == std::numeric_limits<int>::max())
        throw GameError(ErrorCode::NoCycle, "component contains no cycle");

    // First start (ascending) admitting a cycle of minimal length is the
    // minimum vertex of every such cycle.
    for (size_t k = 0; k < component.size(); ++k) {
        Vertex u = component[k];
        std::vector<Vertex> path{u};
        std::vector<bool> visited(game.num_vertices(), false);
        visited[u] = true;
        if (lex_cycle_dfs(game, in_comp, dist_back[k], u, best_len, path, visited))
            return Lasso{{}, path};
    }
    throw GameError(ErrorCode::NoCycle, "component contains no cycle");
}

} // namespace wspe
