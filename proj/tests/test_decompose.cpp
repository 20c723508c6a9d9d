#include <doctest.h>

#include <set>

#include "listcol/decompose.hpp"
#include "listcol/errors.hpp"
#include "listcol/graph.hpp"
#include "test_util.hpp"

using namespace listcol;

namespace {

// Brute-force blocks: maximal vertex sets inducing a 2-connected subgraph,
// plus bridge edges and isolated vertices.
std::vector<std::vector<int>> naive_blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> candidates;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) verts.push_back(v);
        if (verts.size() == 1) {
            if (g.degree(verts[0]) == 0) candidates.push_back(verts);
        } else if (verts.size() == 2) {
            if (g.has_edge(verts[0], verts[1])) candidates.push_back(verts);
        } else {
            if (is_2connected(g.induced(verts))) candidates.push_back(verts);
        }
    }
    std::vector<std::vector<int>> maximal;
    for (const auto& a : candidates) {
        bool dominated = false;
        for (const auto& b : candidates)
            if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(a);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

bool naive_gallai(const Graph& g) {
    for (const auto& b : naive_blocks(g)) {
        auto k = classify_block(g, b);
        if (k.tag == BlockTag::other) return false;
    }
    return true;
}

} // namespace

TEST_CASE("blocks on the spec examples") {
    SUBCASE("butterfly: two triangle blocks, one cut vertex") {
        auto d = blocks(butterfly_graph());
        REQUIRE(d.block_count() == 2);
        CHECK(d.blocks[0] == std::vector<int>{0, 1, 2});
        CHECK(d.blocks[1] == std::vector<int>{2, 3, 4});
        CHECK(d.cut_vertices == std::vector<int>{2});
    }
    SUBCASE("P4: three edge blocks, two cut vertices") {
        auto d = blocks(path_graph(4));
        CHECK(d.block_count() == 3);
        CHECK(d.cut_vertices == std::vector<int>{1, 2});
    }
    SUBCASE("K4: one block, no cut vertices") {
        auto d = blocks(complete_graph(4));
        CHECK(d.block_count() == 1);
        CHECK(d.cut_vertices.empty());
    }
    SUBCASE("isolated vertices are blocks") {
        auto d = blocks(Graph(3, {{0, 1}}));
        CHECK(d.block_count() == 2);
    }
}

TEST_CASE("block classification") {
    Graph k3 = complete_graph(3);
    CHECK(classify_block(k3, {0, 1, 2}).tag == BlockTag::clique); // tie-break
    Graph c4 = cycle_graph(4);
    CHECK(classify_block(c4, {0, 1, 2, 3}).tag == BlockTag::cycle);
    Graph k23 = complete_bipartite(2, 3);
    CHECK(classify_block(k23, {0, 1, 2, 3, 4}).tag == BlockTag::other);
    Graph k2 = complete_graph(2);
    CHECK(classify_block(k2, {0, 1}).tag == BlockTag::clique);
}

TEST_CASE("is_gallai_tree") {
    CHECK(is_gallai_tree(complete_graph(4)).is_gallai_tree);
    CHECK(is_gallai_tree(butterfly_graph()).is_gallai_tree);
    CHECK_FALSE(is_gallai_tree(complete_bipartite(2, 3)).is_gallai_tree);
    CHECK_THROWS_AS(is_gallai_tree(Graph(3, {{0, 1}})), InputError);
}

TEST_CASE("leaf_block") {
    SUBCASE("P3: an end edge and the middle vertex") {
        Graph p3 = path_graph(3);
        auto lb = leaf_block(p3, blocks(p3));
        REQUIRE(lb.has_value());
        CHECK(lb->block == std::vector<int>{0, 1});
        CHECK(lb->cut_vertex == 1);
    }
    SUBCASE("K4 has no leaf block") {
        Graph k4 = complete_graph(4);
        CHECK_FALSE(leaf_block(k4, blocks(k4)).has_value());
    }
    SUBCASE("butterfly: a triangle and the shared vertex") {
        Graph b = butterfly_graph();
        auto lb = leaf_block(b, blocks(b));
        REQUIRE(lb.has_value());
        CHECK(lb->cut_vertex == 2);
        CHECK(lb->block.size() == 3);
    }
}

TEST_CASE("is_2connected") {
    CHECK(is_2connected(cycle_graph(4)));
    CHECK_FALSE(is_2connected(path_graph(3)));
    CHECK_FALSE(is_2connected(butterfly_graph()));
    CHECK_FALSE(is_2connected(complete_graph(2))); // needs three vertices
}

TEST_CASE("every edge lies in exactly one block") {
    std::mt19937 rng(4242);
    auto check_graph = [](const Graph& g) {
        auto d = blocks(g);
        int edge_total = 0;
        for (const auto& b : d.blocks) {
            int inner = 0;
            for (std::size_t i = 0; i < b.size(); ++i)
                for (std::size_t j = i + 1; j < b.size(); ++j)
                    if (g.has_edge(b[i], b[j])) ++inner;
            edge_total += inner;
        }
        CHECK(edge_total == g.edge_count());
    };
    for (int n = 1; n <= 5; ++n) testutil::for_all_graphs(n, check_graph);
    for (int trial = 0; trial < 100; ++trial)
        check_graph(testutil::random_graph(rng, 8, 0.3));
}

TEST_CASE("blocks agree with the naive maximal-2-connected oracle") {
    auto compare = [](const Graph& g) {
        auto fast = blocks(g).blocks;
        auto slow = naive_blocks(g);
        CHECK(fast == slow);
    };
    for (int n = 1; n <= 5; ++n) testutil::for_all_graphs(n, compare);
    std::mt19937 rng(515151);
    for (int trial = 0; trial < 60; ++trial) compare(testutil::random_graph(rng, 7, 0.35));
}

TEST_CASE("is_gallai_tree agrees with the naive oracle on connected graphs") {
    int tested = 0;
    for (int n = 1; n <= 5; ++n)
        testutil::for_all_graphs(n, [&](const Graph& g) {
            if (!g.is_connected()) return;
            ++tested;
            CHECK(is_gallai_tree(g).is_gallai_tree == naive_gallai(g));
        });
    CHECK(tested > 100);
    std::mt19937 rng(616161);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 7, 0.25);
        CHECK(is_gallai_tree(g).is_gallai_tree == naive_gallai(g));
    }
}

TEST_CASE("leaf blocks contain exactly one cut vertex") {
    std::mt19937 rng(727272);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 8, 0.15);
        auto d = blocks(g);
        auto lb = leaf_block(g, d);
        if (d.block_count() <= 1) {
            CHECK_FALSE(lb.has_value());
            continue;
        }
        REQUIRE(lb.has_value());
        int cuts = 0;
        for (int v : lb->block)
            if (d.is_cut_vertex(v)) ++cuts;
        CHECK(cuts == 1);
        CHECK(d.is_cut_vertex(lb->cut_vertex));
    }
}

TEST_CASE("block-cut tree is acyclic") {
    std::mt19937 rng(838383);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 8, 0.2);
        auto d = blocks(g);
        // Tree nodes: blocks + cut vertices; edges: (block, cut in block).
        int tree_edges = 0;
        for (const auto& cv : d.block_cut_vertices) tree_edges += cv.size();
        int tree_nodes = d.block_count() + static_cast<int>(d.cut_vertices.size());
        CHECK(tree_edges == tree_nodes - 1); // connected + acyclic
    }
}
