#ifndef LISTCOL_EXACT_HPP
#define LISTCOL_EXACT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "listcol/bits.hpp"
#include "listcol/instance.hpp"
#include "listcol/result.hpp"

namespace listcol {

// Complete backtracking solver with unit propagation. Ground truth for every
// other solver in the artifact; intended for small instances (n <= 128,
// at most 128 distinct colours, practical up to n around 20).
//
// Branch vertex: smallest remaining list, ties by lowest index. Colours are
// tried in ascending order, so results are deterministic.
class ExactSolver {
public:
    // node_budget 0 means unlimited; otherwise BudgetExceeded is thrown when
    // the number of branch nodes passes the budget.
    explicit ExactSolver(std::uint64_t node_budget = 0) : budget_(node_budget) {}

    SolveResult solve(const Instance& inst) const;
    bool feasible(const Instance& inst) const;

    // Calls cb for every respecting colouring; stops early when cb returns
    // false. Complete (visits each colouring exactly once).
    void enumerate(const Instance& inst,
                   const std::function<bool(const Colouring&)>& cb) const;

private:
    std::uint64_t budget_;
};

inline SolveResult solve_exact(const Instance& inst) { return ExactSolver().solve(inst); }

// Low-level core for callers that need many feasibility probes on a fixed
// graph with varying lists (the choosability enumeration). Lists are given
// as masks over an arbitrary colour indexing chosen by the caller.
class DenseCore {
public:
    DenseCore(int n, const std::vector<Bits128>& adjacency_masks,
              std::uint64_t node_budget = 0);

    // lists[v] must be non-empty for all v. Does not modify `lists`.
    bool feasible(const std::vector<Bits128>& lists) const;

    // As above, but writes one respecting colouring (compact colour indices)
    // when feasible.
    bool find(const std::vector<Bits128>& lists, std::vector<int>* out) const;

    // Enumerates all respecting colourings (compact indices); stops when the
    // callback returns false.
    void enumerate(const std::vector<Bits128>& lists,
                   const std::function<bool(const std::vector<int>&)>& cb) const;

    std::uint64_t nodes_used() const { return nodes_; }

private:
    int n_;
    std::vector<Bits128> adj_;
    std::uint64_t budget_;
    mutable std::uint64_t nodes_ = 0;
    mutable std::vector<std::vector<Bits128>> pool_; // scratch per search depth

    bool search(std::vector<Bits128>& lists, Bits128 done, int depth,
                const std::function<bool(const std::vector<Bits128>&)>& on_solution) const;
};

// Shared helper: compact colour indexing for an instance. Throws InputError
// when the instance exceeds the dense limits.
struct DenseInstance {
    int n;
    std::vector<Bits128> adj;
    std::vector<Bits128> lists;       // over compact colour indices
    std::vector<int> colour_values;   // compact index -> original colour

    // Folds any precolouring into the lists. infeasible_by_precolouring is
    // set when folding empties a list (the instance is trivially infeasible).
    static DenseInstance from(const Instance& inst, bool* infeasible_by_precolouring);
    Colouring to_colouring(const std::vector<int>& compact) const;
};

} // namespace listcol

#endif
