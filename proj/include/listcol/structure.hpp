#ifndef LISTCOL_STRUCTURE_HPP
#define LISTCOL_STRUCTURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "listcol/graph.hpp"

namespace listcol {

// Named small patterns checked as (not necessarily induced) subgraphs.
// "triangle", "c4", "c5", "butterfly", and stars "k1r:<r>".
struct StructureReport {
    int max_degree = 0;
    std::optional<int> girth; // nullopt = acyclic (infinite girth)
    bool bipartite = false;
    bool planar = false;
    bool two_connected = false;
    bool intersecting_triangles = false; // two distinct triangles sharing >= 1 vertex
    std::map<std::string, bool> forbidden; // pattern -> present?
};

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_bipartite(const Graph& g);

// Planarity (Boyer-Myrvold, via Boost.Graph).
bool is_planar(const Graph& g);

bool has_triangle(const Graph& g);
bool has_c4_subgraph(const Graph& g);
bool has_c5_subgraph(const Graph& g);
bool has_butterfly_subgraph(const Graph& g); // two triangles sharing exactly one vertex
bool has_intersecting_triangles(const Graph& g);
bool has_star_subgraph(const Graph& g, int r); // K_{1,r}  <=>  max degree >= r

StructureReport structure_report(const Graph& g,
                                 const std::vector<std::string>& patterns = {});

} // namespace listcol

#endif
