#ifndef LISTCOL_DECOMPOSE_HPP
#define LISTCOL_DECOMPOSE_HPP

#include <optional>
#include <vector>

#include "listcol/graph.hpp"

namespace listcol {

enum class BlockTag { clique, cycle, other };

struct BlockKind {
    BlockTag tag = BlockTag::other;
    // A triangle counts as a clique (tie-break); K2 and isolated vertices
    // count as cliques for Gallai-tree purposes.
};

struct BlockDecomposition {
    // Sorted vertex sets, one per block, ordered lexicographically (which in
    // particular orders them by smallest contained vertex).
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices; // sorted
    // Block-cut tree: for block b, the cut vertices it contains; for the
    // i-th cut vertex, the blocks containing it.
    std::vector<std::vector<int>> block_cut_vertices;
    std::vector<std::vector<int>> cut_vertex_blocks;

    bool is_cut_vertex(int v) const;
    int block_count() const { return static_cast<int>(blocks.size()); }
};

// Biconnected blocks via the standard low-point traversal. Every edge lies
// in exactly one block; isolated vertices form their own blocks.
BlockDecomposition blocks(const Graph& g);

BlockKind classify_block(const Graph& g, const std::vector<int>& block);

struct GallaiReport {
    bool is_gallai_tree = false;
    BlockDecomposition decomposition;
    std::vector<BlockKind> kinds; // parallel to decomposition.blocks
};

// True iff every block of the (connected) graph is a clique or a cycle.
// Throws InputError on disconnected input.
GallaiReport is_gallai_tree(const Graph& g);

struct LeafBlock {
    std::vector<int> block;
    int cut_vertex;
    int block_index;
};

// A block containing exactly one cut vertex, or nullopt iff g (connected)
// has a single block. Deterministic: first such block in decomposition order.
std::optional<LeafBlock> leaf_block(const Graph& g, const BlockDecomposition& d);

// n >= 3, connected, and no cut vertex.
bool is_2connected(const Graph& g);

} // namespace listcol

#endif
