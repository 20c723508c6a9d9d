#ifndef LISTCOL_TEST_UTIL_HPP
#define LISTCOL_TEST_UTIL_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "listcol/graph.hpp"
#include "listcol/instance.hpp"

namespace listcol::testutil {

// Independent ground truth: odometer over all list selections, properness
// checked directly. Deliberately shares no code with the solvers.
inline bool brute_feasible(const Instance& inst) {
    auto eff = inst.effective_lists();
    if (!eff) return false;
    const Graph& g = inst.graph();
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (eff->list(u)[idx[u]] == eff->list(v)[idx[v]]) {
                proper = false;
                break;
            }
        if (proper) return true;
        int pos = 0;
        while (pos < n) {
            if (++idx[pos] < eff->list(pos).size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == n) return false;
    }
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return Graph(n, std::move(es));
}

inline Graph random_tree(std::mt19937& rng, int n) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        es.push_back({pick(rng), v});
    }
    return Graph(n, std::move(es));
}

inline Graph random_connected_graph(std::mt19937& rng, int n, double extra = 0.2) {
    std::vector<Edge> es = random_tree(rng, n).edges();
    std::bernoulli_distribution coin(extra);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) es.push_back({i, j});
    return Graph(n, std::move(es));
}

// Random connected graph with maximum degree <= d.
inline Graph random_bounded_degree_graph(std::mt19937& rng, int n, int d) {
    std::vector<Edge> es;
    std::vector<int> deg(n, 0);
    // Degree-aware random tree.
    for (int v = 1; v < n; ++v) {
        std::vector<int> ok;
        for (int u = 0; u < v; ++u)
            if (deg[u] < d) ok.push_back(u);
        std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
        int u = ok[pick(rng)];
        es.push_back({u, v});
        ++deg[u];
        ++deg[v];
    }
    Graph base(n, es);
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (deg[i] < d && deg[j] < d && !base.has_edge(i, j) && coin(rng)) {
                es.push_back({i, j});
                ++deg[i];
                ++deg[j];
            }
    return Graph(n, std::move(es));
}

inline ColourList random_list(std::mt19937& rng, int size, int universe) {
    std::vector<int> pool(universe);
    for (int c = 0; c < universe; ++c) pool[c] = c + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    ColourList l(pool.begin(), pool.begin() + size);
    std::sort(l.begin(), l.end());
    return l;
}

inline ListAssignment random_lists(std::mt19937& rng, int n, int min_size, int max_size,
                                   int universe) {
    std::uniform_int_distribution<int> sz(min_size, max_size);
    std::vector<ColourList> ls;
    for (int v = 0; v < n; ++v) ls.push_back(random_list(rng, sz(rng), universe));
    return ListAssignment(std::move(ls));
}

// All labelled graphs on n vertices (use only for small n).
inline void for_all_graphs(int n, const std::function<void(const Graph&)>& f) {
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << all.size()); ++mask) {
        std::vector<Edge> es;
        for (std::size_t b = 0; b < all.size(); ++b)
            if (mask >> b & 1) es.push_back(all[b]);
        f(Graph(n, std::move(es)));
    }
}

// Gallai tree: random cliques and cycles glued along shared vertices.
inline Graph random_gallai_tree(std::mt19937& rng, int block_count) {
    std::vector<Edge> es;
    int n = 1;
    for (int b = 0; b < block_count; ++b) {
        std::uniform_int_distribution<int> attach(0, n - 1);
        int root = attach(rng);
        std::uniform_int_distribution<int> size(2, 4);
        int bs = size(rng);
        std::vector<int> verts{root};
        for (int i = 1; i < bs; ++i) verts.push_back(n++);
        std::bernoulli_distribution as_cycle(0.5);
        if (bs >= 3 && as_cycle(rng)) {
            for (int i = 0; i < bs; ++i)
                es.push_back({verts[i], verts[(i + 1) % bs]});
        } else {
            for (int i = 0; i < bs; ++i)
                for (int j = i + 1; j < bs; ++j) es.push_back({verts[i], verts[j]});
        }
    }
    return Graph(n, std::move(es));
}

// Generic brute-force subgraph test: tries every injection of `pattern`.
inline bool has_subgraph_brute(const Graph& g, const Graph& pattern) {
    int pn = pattern.vertex_count(), gn = g.vertex_count();
    if (pn > gn) return false;
    std::vector<int> map(pn, -1);
    std::vector<bool> used(gn, false);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == pn) return true;
        for (int w = 0; w < gn; ++w) {
            if (used[w] || g.degree(w) < pattern.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (pattern.has_edge(u, v) && !g.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (place(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return place(0);
}

// Shortest simple cycle by DFS over all starting vertices (brute force).
inline std::optional<int> girth_brute(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<bool> used(n, false);
    std::function<void(int, int, int)> dfs = [&](int start, int v, int depth) {
        for (int w : g.neighbours(v)) {
            if (w == start && depth >= 3) {
                if (best == -1 || depth < best) best = depth;
            } else if (w > start && !used[w]) {
                if (best != -1 && depth + 1 >= best) continue;
                used[w] = true;
                dfs(start, w, depth + 1);
                used[w] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = true;
        dfs(s, s, 1);
        used[s] = false;
    }
    if (best == -1) return std::nullopt;
    return best;
}

} // namespace listcol::testutil

#endif
