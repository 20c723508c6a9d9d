#ifndef LISTCOL_INSTANCE_HPP
#define LISTCOL_INSTANCE_HPP

#include <optional>
#include <vector>

#include "listcol/graph.hpp"

namespace listcol {

// Colours are small non-negative integers; lists are kept sorted and unique.
using ColourList = std::vector<int>;

// Per-vertex admissible colours. Every list must be non-empty.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<ColourList> lists);
    // Same list for every one of n vertices.
    static ListAssignment uniform(int n, ColourList colours);

    int vertex_count() const { return static_cast<int>(lists_.size()); }
    const ColourList& list(int v) const { return lists_[v]; }
    const std::vector<ColourList>& lists() const { return lists_; }
    bool contains(int v, int colour) const;

    int size() const;                 // max list size
    bool is_regular(int ell) const;   // every list has size exactly ell
    std::vector<int> colour_universe() const; // sorted distinct colours

    ListAssignment restricted_to(const std::vector<int>& keep) const;
    ListAssignment with_colour_removed(int v, int colour) const;
    ListAssignment with_list(int v, ColourList colours) const;

    friend bool operator==(const ListAssignment& a, const ListAssignment& b) {
        return a.lists_ == b.lists_;
    }

private:
    std::vector<ColourList> lists_;
};

// Total vertex -> colour map.
struct Colouring {
    std::vector<int> colour;

    int operator[](int v) const { return colour[v]; }
    int size() const { return static_cast<int>(colour.size()); }
};

// Partial proper colouring on subset W with palette 1..k.
class Precolouring {
public:
    Precolouring() = default;
    // assignment[v] < 0 means unassigned.
    Precolouring(std::vector<int> assignment, int k);

    int vertex_count() const { return static_cast<int>(assignment_.size()); }
    int palette() const { return k_; }
    bool assigned(int v) const { return assignment_[v] >= 0; }
    int colour(int v) const { return assignment_[v]; }
    const std::vector<int>& raw() const { return assignment_; }
    std::vector<int> domain() const; // sorted vertices of W
    bool proper_on(const Graph& g) const;

    friend bool operator==(const Precolouring& a, const Precolouring& b) {
        return a.k_ == b.k_ && a.assignment_ == b.assignment_;
    }

private:
    std::vector<int> assignment_;
    int k_ = 0;
};

// Graph + lists (+ optional precolouring): the unit every solver consumes.
class Instance {
public:
    Instance() = default;
    Instance(Graph g, ListAssignment lists);
    Instance(Graph g, ListAssignment lists, Precolouring pre);

    const Graph& graph() const { return graph_; }
    const ListAssignment& lists() const { return lists_; }
    const std::optional<Precolouring>& precolouring() const { return pre_; }

    int vertex_count() const { return graph_.vertex_count(); }

    // Folds any precolouring into the lists (L(w) := L(w) ∩ {c_W(w)}).
    // Returns nullopt when some folded list would be empty (no extension can
    // exist).
    std::optional<ListAssignment> effective_lists() const;

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.graph_ == b.graph_ && a.lists_ == b.lists_ && a.pre_ == b.pre_;
    }

private:
    Graph graph_;
    ListAssignment lists_;
    std::optional<Precolouring> pre_;
};

// True iff c is total, proper, respects the lists, and agrees with any
// precolouring.
bool check_colouring(const Instance& inst, const Colouring& c);

// One peel step: the removed vertex, its neighbours at removal time and its
// list at removal time, all in original vertex indices.
struct PeelStep {
    int vertex;
    std::vector<int> neighbours;
    ColourList list;
};

using PeelLog = std::vector<PeelStep>;

struct PeelResult {
    // Same vertex count as the input; peeled vertices are isolated (their
    // lists are retained and cannot affect feasibility).
    Instance kernel;
    PeelLog log;
    std::vector<int> remaining; // sorted vertices still present

    bool kernel_empty() const { return remaining.empty(); }
};

// Repeatedly removes the lowest-indexed vertex with degree < |L(v)|.
// Kernel satisfies |L(u)| <= deg(u) on remaining vertices and is colourable
// iff the input is. Input must not carry a precolouring.
PeelResult peel_reducible(const Instance& inst);

// Extends a kernel colouring to the full instance by greedy reinsertion in
// reverse peel order; always succeeds because degree < list size held at
// each removal. kernelColouring must be valid for peel.kernel.
Colouring restore_colouring(const PeelResult& peel, Colouring kernelColouring);

} // namespace listcol

#endif
