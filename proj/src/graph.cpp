#include "listcol/graph.hpp"

#include <algorithm>
#include <cctype>

#include "listcol/errors.hpp"

namespace listcol {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw InputError("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> Graph::component_ids(int* count) const {
    std::vector<int> comp(n_, -1);
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v])
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    int c = 0;
    component_ids(&c);
    return c == 1;
}

std::vector<std::vector<int>> Graph::components() const {
    int c = 0;
    auto ids = component_ids(&c);
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < n_; ++v) out[ids[v]].push_back(v);
    return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> newid(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int v = keep[i];
        if (v < 0 || v >= n_ || newid[v] != -1)
            throw InputError("induced: bad vertex list");
        newid[v] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (newid[u] != -1 && newid[v] != -1)
            es.push_back({newid[u], newid[v]});
    return Graph(static_cast<int>(keep.size()), std::move(es));
}

Graph Graph::with_edge_removed(int u, int v) const {
    if (!has_edge(u, v)) throw InputError("with_edge_removed: no such edge");
    if (u > v) std::swap(u, v);
    std::vector<Edge> es;
    es.reserve(edges_.size() - 1);
    for (auto e : edges_)
        if (e != Edge{u, v}) es.push_back(e);
    return Graph(n_, std::move(es));
}

Graph Graph::with_vertex_removed(int v) const {
    if (v < 0 || v >= n_) throw InputError("with_vertex_removed: out of range");
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

bool Graph::is_complete() const {
    return edge_count() == n_ * (n_ - 1) / 2;
}

bool Graph::is_cycle_graph() const {
    if (n_ < 3 || !is_connected()) return false;
    for (int v = 0; v < n_; ++v)
        if (degree(v) != 2) return false;
    return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) es.push_back({u + off, v + off});
    return Graph(a.vertex_count() + b.vertex_count(), std::move(es));
}

Graph path_graph(int n) {
    if (n < 1) throw InputError("P_n needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InputError("C_n needs n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, std::move(es));
}

Graph complete_graph(int n) {
    if (n < 1) throw InputError("K_n needs n >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, std::move(es));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw InputError("K_{a,b} needs a,b >= 1");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return Graph(a + b, std::move(es));
}

Graph wheel_graph(int n) {
    // W_n has n vertices in total: hub 0 plus a cycle on n-1 rim vertices.
    if (n < 4) throw InputError("W_n needs n >= 4");
    std::vector<Edge> es;
    int rim = n - 1;
    for (int i = 0; i < rim; ++i) {
        es.push_back({0, 1 + i});
        es.push_back({1 + i, 1 + (i + 1) % rim});
    }
    return Graph(n, std::move(es));
}

Graph butterfly_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph petersen_graph() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});         // outer cycle
        es.push_back({5 + i, 5 + (i + 2) % 5}); // inner pentagram
        es.push_back({i, 5 + i});               // spokes
    }
    return Graph(10, std::move(es));
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InputError("grid needs positive dimensions");
    std::vector<Edge> es;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) es.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph(rows * cols, std::move(es));
}

Graph named_graph(const std::string& family, const std::vector<int>& params) {
    std::string f;
    for (char c : family) f += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw InputError("family '" + family + "' expects " + std::to_string(k) +
                             " parameter(s)");
    };
    if (f == "p" || f == "path") { need(1); return path_graph(params[0]); }
    if (f == "c" || f == "cycle") { need(1); return cycle_graph(params[0]); }
    if (f == "k" || f == "complete") { need(1); return complete_graph(params[0]); }
    if (f == "kab" || f == "biclique") { need(2); return complete_bipartite(params[0], params[1]); }
    if (f == "w" || f == "wheel") { need(1); return wheel_graph(params[0]); }
    if (f == "butterfly") { need(0); return butterfly_graph(); }
    if (f == "petersen") { need(0); return petersen_graph(); }
    if (f == "grid") { need(2); return grid_graph(params[0], params[1]); }
    throw InputError("unknown graph family '" + family + "'");
}

namespace {

bool extend_iso(const Graph& a, const Graph& b, std::vector<int>& map,
                std::vector<bool>& used, int v) {
    int n = a.vertex_count();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || b.degree(w) != a.degree(v)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_iso(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

} // namespace

bool find_isomorphism(const Graph& a, const Graph& b, std::vector<int>* mapping) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> map(a.vertex_count(), -1);
    std::vector<bool> used(a.vertex_count(), false);
    if (!extend_iso(a, b, map, used, 0)) return false;
    if (mapping) *mapping = map;
    return true;
}

} // namespace listcol
