#ifndef LISTCOL_GRAPH_HPP
#define LISTCOL_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

namespace listcol {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// all derived graphs are built as fresh values.
class Graph {
public:
    Graph() = default;
    // Validates: indices in range, no loops; parallel edges collapse.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;

    bool is_connected() const;
    // Component id per vertex, ids 0.. in order of smallest contained vertex.
    std::vector<int> component_ids(int* count = nullptr) const;
    // Vertex sets of connected components, each sorted.
    std::vector<std::vector<int>> components() const;

    // Subgraph induced on `keep` (sorted ascending); new vertex i corresponds
    // to keep[i].
    Graph induced(const std::vector<int>& keep) const;

    Graph with_edge_removed(int u, int v) const;
    Graph with_vertex_removed(int v) const; // reindexes: vertices > v shift down

    bool is_complete() const;
    bool is_cycle_graph() const; // connected and 2-regular, n >= 3

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Disjoint union; vertices of b are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

// Standard families.
Graph path_graph(int n);            // P_n, n >= 1
Graph cycle_graph(int n);           // C_n, n >= 3
Graph complete_graph(int n);        // K_n, n >= 1
Graph complete_bipartite(int a, int b);
Graph wheel_graph(int n);           // W_n: hub 0 + C_{n-1}, n >= 4
Graph butterfly_graph();            // two triangles sharing one vertex
Graph petersen_graph();
Graph grid_graph(int rows, int cols);

// family: one of P, C, K, Kab, W, butterfly, petersen, grid
// (case-insensitive; also accepts long names "path", "cycle", ...).
Graph named_graph(const std::string& family, const std::vector<int>& params);

// Brute-force isomorphism search, intended for n <= 8.
bool find_isomorphism(const Graph& a, const Graph& b, std::vector<int>* mapping = nullptr);

} // namespace listcol

#endif
