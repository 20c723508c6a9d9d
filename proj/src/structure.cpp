#include "listcol/structure.hpp"

#include <algorithm>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "listcol/decompose.hpp"
#include "listcol/errors.hpp"

namespace listcol {

std::optional<int> girth(const Graph& g) {
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (best != -1 && 2 * dist[v] >= best) continue; // cannot improve
            for (int w : g.neighbours(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v]) {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_planar(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 4) return true;
    // Quick Euler-bound rejection.
    if (g.edge_count() > 3 * n - 6) return false;
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(n);
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        const auto& a = g.neighbours(u);
        const auto& b = g.neighbours(v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) ++i;
            else ++j;
        }
    }
    return false;
}

bool has_c4_subgraph(const Graph& g) {
    // A 4-cycle exists iff some vertex pair has two common neighbours.
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto& a = g.neighbours(u);
            const auto& b = g.neighbours(v);
            int common = 0;
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) {
                    ++common;
                    if (common >= 2) return true;
                    ++i;
                    ++j;
                } else if (a[i] < b[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
    return false;
}

namespace {

bool c5_search(const Graph& g, int start, std::vector<int>& path, std::vector<bool>& used) {
    if (path.size() == 5)
        return g.has_edge(path.back(), start);
    int last = path.back();
    for (int w : g.neighbours(last)) {
        if (w <= start || used[w]) continue; // canonical: start is the minimum
        used[w] = true;
        path.push_back(w);
        if (c5_search(g, start, path, used)) return true;
        path.pop_back();
        used[w] = false;
    }
    return false;
}

} // namespace

bool has_c5_subgraph(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> used(n, false);
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        used[s] = true;
        if (c5_search(g, s, path, used)) return true;
        used[s] = false;
    }
    return false;
}

bool has_butterfly_subgraph(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        // Triangles through v as pairs of adjacent neighbours.
        const auto& nb = g.neighbours(v);
        std::vector<std::pair<int, int>> tris;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.has_edge(nb[i], nb[j])) tris.push_back({nb[i], nb[j]});
        for (std::size_t i = 0; i < tris.size(); ++i)
            for (std::size_t j = i + 1; j < tris.size(); ++j) {
                auto [a, b] = tris[i];
                auto [c, d] = tris[j];
                if (a != c && a != d && b != c && b != d) return true;
            }
    }
    return false;
}

bool has_intersecting_triangles(const Graph& g) {
    // Two distinct triangles share a vertex iff some vertex lies in two
    // distinct triangles.
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbours(v);
        int count = 0;
        for (std::size_t i = 0; i < nb.size() && count < 2; ++i)
            for (std::size_t j = i + 1; j < nb.size() && count < 2; ++j)
                if (g.has_edge(nb[i], nb[j])) ++count;
        if (count >= 2) return true;
    }
    return false;
}

bool has_star_subgraph(const Graph& g, int r) {
    if (r < 1) throw InputError("star K_{1,r} needs r >= 1");
    return g.max_degree() >= r;
}

StructureReport structure_report(const Graph& g, const std::vector<std::string>& patterns) {
    StructureReport rep;
    rep.max_degree = g.max_degree();
    rep.girth = girth(g);
    rep.bipartite = is_bipartite(g);
    rep.planar = is_planar(g);
    rep.two_connected = is_2connected(g);
    rep.intersecting_triangles = has_intersecting_triangles(g);
    for (const auto& p : patterns) {
        if (p == "triangle") rep.forbidden[p] = has_triangle(g);
        else if (p == "c4") rep.forbidden[p] = has_c4_subgraph(g);
        else if (p == "c5") rep.forbidden[p] = has_c5_subgraph(g);
        else if (p == "butterfly") rep.forbidden[p] = has_butterfly_subgraph(g);
        else if (p.rfind("k1r:", 0) == 0) {
            int r = std::stoi(p.substr(4));
            rep.forbidden[p] = has_star_subgraph(g, r);
        } else {
            throw InputError("unknown pattern '" + p + "'");
        }
    }
    return rep;
}

} // namespace listcol
