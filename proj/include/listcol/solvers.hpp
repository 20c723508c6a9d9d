#ifndef LISTCOL_SOLVERS_HPP
#define LISTCOL_SOLVERS_HPP

#include <functional>
#include <optional>
#include <string>

#include "listcol/decompose.hpp"
#include "listcol/instance.hpp"
#include "listcol/result.hpp"

namespace listcol {

// ---- polynomial special-case solvers ----

// Lists of size <= 2, solved through the implication graph (2-SAT); linear
// in n + m. Throws InputError when some list is larger.
SolveResult solve_2list(const Instance& inst);

// Maximum degree <= 2: dynamic programming along paths and cycles.
// Throws InputError when the degree bound fails.
SolveResult solve_max_degree2(const Instance& inst);

// List colouring of a single block. Cliques are solved as a system of
// distinct representatives (bipartite matching vertex -> colour); cycles by
// the path/cycle DP. kind must not be BlockTag::other.
SolveResult solve_block(const Graph& block, BlockKind kind, const ListAssignment& lists);

// Complete solver for any graph whose blocks the given solver handles.
// Returns nullopt for infeasible. The default solver is complete for graphs
// that are complete or of maximum degree <= 2 (covering cliques, cycles and
// the paths that arise when a cut vertex is removed from a cycle).
using BlockSubSolver =
    std::function<std::optional<Colouring>(const Graph&, const ListAssignment&)>;
BlockSubSolver default_block_solver();

// Leaf-block peeling: repeatedly filters the cut vertex's list of a leaf
// block down to the colours for which the block body stays colourable, then
// discards the block body. inst must be connected and precolouring-free.
SolveResult solve_block_peeling(const Instance& inst, const BlockSubSolver& sub);

// Every component must be a Gallai tree (all blocks cliques or cycles);
// otherwise InputError. Complete and polynomial.
SolveResult solve_gallai_tree(const Instance& inst);

// Requires |L(v)| >= deg(v) for every vertex. Peels to an exact degree-list
// kernel internally, then solves Gallai-tree components by block peeling and
// the remaining components (where a colouring is guaranteed to exist) by the
// two-nonadjacent-neighbours construction, with a flagged backtracking
// fallback.
SolveResult solve_degree_lists(const Instance& inst);

// k-precolouring extension for graphs of maximum degree <= k: fold the
// precoloured neighbourhood into lists, peel, then dispatch per component.
// Throws InputError when max degree exceeds k or the precolouring is not
// proper. Precoloured vertices are never altered.
SolveResult solve_precolouring_extension(const Graph& g, const Precolouring& pre, int k);

// ---- dispatch ----

struct DispatchReport {
    int max_list_size = 0;
    bool lists_regular = false;
    int regularity = 0; // meaningful when lists_regular
    int max_degree = 0;
    bool bipartite = false;
    std::optional<bool> planar; // only computed for small graphs
    bool all_components_gallai = false;
    bool has_precolouring = false;
    std::string classification; // which classical result justifies the method
    std::string method;
};

// Detects features, picks the first applicable polynomial case
// (2-lists, max degree <= 2, Gallai-tree components, degree lists,
// precolouring extension), otherwise falls back to the exact solver.
std::pair<DispatchReport, SolveResult> classify_and_solve(const Instance& inst);

} // namespace listcol

#endif
