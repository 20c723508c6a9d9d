#include "listcol/solvers.hpp"

#include <algorithm>
#include <queue>

#include "listcol/errors.hpp"
#include "listcol/exact.hpp"

namespace listcol {

namespace {

// Raw lists (possibly empty) used for scratch work inside the solvers; the
// public ListAssignment invariant (non-empty lists) is re-established at the
// boundaries.
using RawLists = std::vector<ColourList>;

void list_erase(ColourList& l, int c) {
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it != l.end() && *it == c) l.erase(it);
}

// ---- clique lists: system of distinct representatives via Kuhn matching ----

std::optional<std::vector<int>> match_clique_lists(const RawLists& lists) {
    int nv = static_cast<int>(lists.size());
    std::vector<int> universe;
    for (const auto& l : lists) universe.insert(universe.end(), l.begin(), l.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    int nc = static_cast<int>(universe.size());
    if (nc < nv) return std::nullopt;

    std::vector<std::vector<int>> options(nv); // vertex -> colour ids
    for (int v = 0; v < nv; ++v) {
        if (lists[v].empty()) return std::nullopt;
        for (int c : lists[v]) {
            auto it = std::lower_bound(universe.begin(), universe.end(), c);
            options[v].push_back(static_cast<int>(it - universe.begin()));
        }
    }

    std::vector<int> owner(nc, -1); // colour id -> vertex
    std::vector<char> seen(nc, 0);
    std::function<bool(int)> augment = [&](int v) -> bool {
        for (int c : options[v]) {
            if (seen[c]) continue;
            seen[c] = 1;
            if (owner[c] == -1 || augment(owner[c])) {
                owner[c] = v;
                return true;
            }
        }
        return false;
    };
    for (int v = 0; v < nv; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!augment(v)) return std::nullopt;
    }
    std::vector<int> colour(nv, -1);
    for (int c = 0; c < nc; ++c)
        if (owner[c] != -1) colour[owner[c]] = universe[c];
    return colour;
}

// ---- path DP ----

// Proper colouring of a path v_0 - v_1 - ... picking the lexicographically
// smallest colours along the sequence; nullopt when infeasible.
std::optional<std::vector<int>> colour_path(const RawLists& seq) {
    int k = static_cast<int>(seq.size());
    if (k == 0) return std::vector<int>{};
    std::vector<std::vector<char>> ok(k);
    for (int i = 0; i < k; ++i) ok[i].assign(seq[i].size(), 0);
    for (std::size_t j = 0; j < seq[k - 1].size(); ++j) ok[k - 1][j] = 1;
    for (int i = k - 2; i >= 0; --i)
        for (std::size_t j = 0; j < seq[i].size(); ++j) {
            for (std::size_t j2 = 0; j2 < seq[i + 1].size(); ++j2)
                if (ok[i + 1][j2] && seq[i + 1][j2] != seq[i][j]) {
                    ok[i][j] = 1;
                    break;
                }
        }
    std::vector<int> out(k);
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        int chosen = -1;
        for (std::size_t j = 0; j < seq[i].size(); ++j)
            if (ok[i][j] && seq[i][j] != prev) {
                chosen = seq[i][j];
                break;
            }
        if (chosen == -1) return std::nullopt;
        out[i] = chosen;
        prev = chosen;
    }
    return out;
}

// Cycle v_0 - ... - v_{k-1} - v_0: fix the first vertex's colour, restrict
// both path ends, and reuse the path DP. Colours of v_0 tried ascending.
std::optional<std::vector<int>> colour_cycle(const RawLists& seq) {
    int k = static_cast<int>(seq.size());
    if (k < 3) throw InternalError("cycle sequence too short");
    for (int c0 : seq[0]) {
        RawLists rest(seq.begin() + 1, seq.end());
        list_erase(rest.front(), c0);
        list_erase(rest.back(), c0);
        if (rest.front().empty() || rest.back().empty()) continue;
        if (auto path = colour_path(rest)) {
            std::vector<int> out(k);
            out[0] = c0;
            std::copy(path->begin(), path->end(), out.begin() + 1);
            return out;
        }
    }
    return std::nullopt;
}

// ---- component sequencing for max degree <= 2 ----

// Visits the component of `start` (which must induce a path or cycle) and
// returns its vertices in traversal order plus whether it closes a cycle.
std::pair<std::vector<int>, bool> trace_component(const Graph& g, int start,
                                                  std::vector<bool>& visited) {
    // Prefer to start from an endpoint (degree <= 1) of the component.
    int s = start;
    {
        // BFS to find the smallest endpoint, if any.
        std::vector<int> comp, stack{start};
        std::vector<bool> local(g.vertex_count(), false);
        local[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbours(v))
                if (!local[w]) {
                    local[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        int endpoint = -1;
        for (int v : comp)
            if (g.degree(v) <= 1) {
                endpoint = v;
                break;
            }
        s = endpoint != -1 ? endpoint : comp.front();
    }

    std::vector<int> order{s};
    visited[s] = true;
    int prev = -1, cur = s;
    for (;;) {
        int next = -1;
        for (int w : g.neighbours(cur))
            if (w != prev && !visited[w]) {
                next = w;
                break;
            }
        if (next == -1) break;
        visited[next] = true;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    bool cycle = order.size() >= 3 && g.has_edge(order.back(), order.front());
    return {order, cycle};
}

// ---- 2-SAT ----

struct TwoSat {
    int nodes;
    std::vector<std::vector<int>> adj;
    explicit TwoSat(int nodes) : nodes(nodes), adj(nodes) {}
    void implies(int a, int b) { adj[a].push_back(b); }

    // Tarjan SCC, iterative. comp ids are assigned in completion order, so a
    // smaller id means closer to the sink side of the condensation.
    std::vector<int> scc() const {
        std::vector<int> comp(nodes, -1), low(nodes), disc(nodes, -1), stk;
        std::vector<char> on(nodes, 0);
        int timer = 0, comps = 0;
        struct Frame {
            int v;
            std::size_t next;
        };
        for (int s = 0; s < nodes; ++s) {
            if (disc[s] != -1) continue;
            std::vector<Frame> frames{{s, 0}};
            disc[s] = low[s] = timer++;
            stk.push_back(s);
            on[s] = 1;
            while (!frames.empty()) {
                Frame& f = frames.back();
                if (f.next < adj[f.v].size()) {
                    int w = adj[f.v][f.next++];
                    if (disc[w] == -1) {
                        disc[w] = low[w] = timer++;
                        stk.push_back(w);
                        on[w] = 1;
                        frames.push_back({w, 0});
                    } else if (on[w]) {
                        low[f.v] = std::min(low[f.v], disc[w]);
                    }
                } else {
                    int v = f.v;
                    frames.pop_back();
                    if (!frames.empty())
                        low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                    if (low[v] == disc[v]) {
                        for (;;) {
                            int w = stk.back();
                            stk.pop_back();
                            on[w] = 0;
                            comp[w] = comps;
                            if (w == v) break;
                        }
                        ++comps;
                    }
                }
            }
        }
        return comp;
    }
};

Instance fold_or_same(const Instance& inst, bool* infeasible) {
    *infeasible = false;
    if (!inst.precolouring()) return inst;
    auto eff = inst.effective_lists();
    if (!eff) {
        *infeasible = true;
        return Instance(inst.graph(), inst.lists());
    }
    return Instance(inst.graph(), *eff);
}

// Greedy colouring in reverse-BFS order from `root` over the sub-instance
// (graph g restricted to `alive`, lists `lists`); vertices already coloured
// in `out` (>= 0) act as fixed constraints. Returns false when some vertex
// has no free colour.
bool greedy_reverse_bfs(const Graph& g, const std::vector<int>& comp,
                        const RawLists& lists, int root, std::vector<int>& out) {
    std::vector<int> order;
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<int> q;
    q.push(root);
    seen[root] = true;
    std::vector<bool> in_comp(g.vertex_count(), false);
    for (int v : comp) in_comp[v] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int w : g.neighbours(v))
            if (in_comp[w] && !seen[w] && out[w] < 0) {
                seen[w] = true;
                q.push(w);
            }
    }
    std::size_t uncoloured = 0;
    for (int v : comp)
        if (out[v] < 0) ++uncoloured;
    if (order.size() != uncoloured) return false; // root cannot reach everyone
    std::reverse(order.begin(), order.end());     // root comes last
    for (int v : order) {
        if (out[v] >= 0) continue;
        int chosen = -1;
        for (int c : lists[v]) {
            bool clash = false;
            for (int w : g.neighbours(v))
                if (out[w] == c) {
                    clash = true;
                    break;
                }
            if (!clash) {
                chosen = c;
                break;
            }
        }
        if (chosen == -1) return false;
        out[v] = chosen;
    }
    return true;
}

} // namespace

// ---- solve_2list ----

SolveResult solve_2list(const Instance& inst0) {
    bool pre_conflict = false;
    Instance inst = fold_or_same(inst0, &pre_conflict);
    if (pre_conflict) return SolveResult::none("two-list");
    const auto& lists = inst.lists();
    const Graph& g = inst.graph();
    int n = g.vertex_count();
    if (lists.size() > 2)
        throw InputError("solve_2list requires every list to have size <= 2");

    TwoSat sat(2 * n);
    auto node = [](int v, int slot) { return 2 * v + slot; };
    for (int v = 0; v < n; ++v)
        if (lists.list(v).size() == 1) sat.implies(node(v, 1), node(v, 0));
    for (auto [u, v] : g.edges()) {
        const auto& lu = lists.list(u);
        const auto& lv = lists.list(v);
        for (std::size_t i = 0; i < lu.size(); ++i)
            for (std::size_t j = 0; j < lv.size(); ++j)
                if (lu[i] == lv[j]) {
                    // not (u=i and v=j)
                    sat.implies(node(u, static_cast<int>(i)), node(v, 1 - static_cast<int>(j)));
                    sat.implies(node(v, static_cast<int>(j)), node(u, 1 - static_cast<int>(i)));
                }
    }
    auto comp = sat.scc();
    Colouring c;
    c.colour.resize(n);
    for (int v = 0; v < n; ++v) {
        if (comp[node(v, 0)] == comp[node(v, 1)]) return SolveResult::none("two-list");
        int slot = comp[node(v, 0)] < comp[node(v, 1)] ? 0 : 1;
        if (slot >= static_cast<int>(inst.lists().list(v).size()))
            throw InternalError("2-SAT picked the forced-false slot");
        c.colour[v] = inst.lists().list(v)[slot];
    }
    return SolveResult::found(std::move(c), "two-list");
}

// ---- solve_max_degree2 ----

SolveResult solve_max_degree2(const Instance& inst0) {
    bool pre_conflict = false;
    Instance inst = fold_or_same(inst0, &pre_conflict);
    if (pre_conflict) return SolveResult::none("max-degree-2");
    const Graph& g = inst.graph();
    if (g.max_degree() > 2)
        throw InputError("solve_max_degree2 requires maximum degree <= 2");

    int n = g.vertex_count();
    Colouring out;
    out.colour.assign(n, -1);
    std::vector<bool> visited(n, false);
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        auto [order, is_cycle] = trace_component(g, s, visited);
        RawLists seq;
        seq.reserve(order.size());
        for (int v : order) seq.push_back(inst.lists().list(v));
        auto sol = is_cycle ? colour_cycle(seq) : colour_path(seq);
        if (!sol) return SolveResult::none("max-degree-2");
        for (std::size_t i = 0; i < order.size(); ++i) out.colour[order[i]] = (*sol)[i];
    }
    return SolveResult::found(std::move(out), "max-degree-2");
}

// ---- solve_block ----

SolveResult solve_block(const Graph& block, BlockKind kind, const ListAssignment& lists) {
    if (lists.vertex_count() != block.vertex_count())
        throw InputError("solve_block: lists do not match the block");
    if (kind.tag == BlockTag::other)
        throw InputError("solve_block handles cliques and cycles only");
    if (kind.tag == BlockTag::clique) {
        auto match = match_clique_lists(lists.lists());
        if (!match) return SolveResult::none("block-clique");
        return SolveResult::found(Colouring{*match}, "block-clique");
    }
    // cycle
    auto r = solve_max_degree2(Instance(block, lists));
    r.method = "block-cycle";
    return r;
}

BlockSubSolver default_block_solver() {
    return [](const Graph& g, const ListAssignment& lists) -> std::optional<Colouring> {
        if (g.is_complete()) {
            auto match = match_clique_lists(lists.lists());
            if (!match) return std::nullopt;
            return Colouring{*match};
        }
        if (g.max_degree() <= 2) {
            auto r = solve_max_degree2(Instance(g, lists));
            if (!r.feasible) return std::nullopt;
            return r.colouring;
        }
        throw InputError("unsupported block kind for the default block solver");
    };
}

// ---- solve_block_peeling ----

namespace {

// Solves the block body B \ {u} under "u takes colour i": i is removed from
// the lists of u's neighbours inside the block. Returns the body colouring
// in body-local indices, or nullopt.
std::optional<Colouring> solve_block_body(const Graph& g, const std::vector<int>& body,
                                          const RawLists& lists, int u, int colour_of_u,
                                          const BlockSubSolver& sub) {
    RawLists body_lists;
    body_lists.reserve(body.size());
    for (int w : body) {
        ColourList l = lists[w];
        if (g.has_edge(w, u)) list_erase(l, colour_of_u);
        if (l.empty()) return std::nullopt;
        body_lists.push_back(std::move(l));
    }
    Graph bg = g.induced(body);
    return sub(bg, ListAssignment(std::move(body_lists)));
}

} // namespace

SolveResult solve_block_peeling(const Instance& inst0, const BlockSubSolver& sub) {
    bool pre_conflict = false;
    Instance inst = fold_or_same(inst0, &pre_conflict);
    if (pre_conflict) return SolveResult::none("block-peeling");
    const Graph& g = inst.graph();
    if (!g.is_connected())
        throw InputError("solve_block_peeling expects a connected graph");

    SolveStats stats;
    BlockDecomposition d = blocks(g);
    RawLists lists = inst.lists().lists();

    if (d.block_count() == 1) {
        auto c = sub(g, inst.lists());
        if (!c) return SolveResult::none("block-peeling", stats);
        return SolveResult::found(std::move(*c), "block-peeling", stats);
    }

    // Root the block-cut tree at block 0 and BFS outward.
    int nb = d.block_count();
    std::vector<int> parent_cut(nb, -1);
    std::vector<int> order;
    std::vector<bool> seen(nb, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        order.push_back(b);
        for (int cv : d.block_cut_vertices[b]) {
            auto it = std::lower_bound(d.cut_vertices.begin(), d.cut_vertices.end(), cv);
            int ci = static_cast<int>(it - d.cut_vertices.begin());
            for (int nb2 : d.cut_vertex_blocks[ci])
                if (!seen[nb2]) {
                    seen[nb2] = true;
                    parent_cut[nb2] = cv;
                    q.push(nb2);
                }
        }
    }

    // Peel leaf blocks bottom-up: children are filtered before their parents.
    struct Frame {
        int block;
        int cut;
    };
    std::vector<Frame> frames;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int b = *it;
        if (parent_cut[b] == -1) continue; // root block stays
        int u = parent_cut[b];
        std::vector<int> body;
        for (int v : d.blocks[b])
            if (v != u) body.push_back(v);
        ColourList survivors;
        for (int i : lists[u])
            if (solve_block_body(g, body, lists, u, i, sub)) survivors.push_back(i);
        if (survivors.empty()) return SolveResult::none("block-peeling", stats);
        lists[u] = std::move(survivors);
        frames.push_back({b, u});
        ++stats.peel_steps;
    }

    // Solve the root block with the filtered lists.
    int root = order.front();
    Colouring out;
    out.colour.assign(g.vertex_count(), -1);
    {
        RawLists root_lists;
        for (int v : d.blocks[root]) root_lists.push_back(lists[v]);
        Graph rg = g.induced(d.blocks[root]);
        auto c = sub(rg, ListAssignment(std::move(root_lists)));
        if (!c) return SolveResult::none("block-peeling", stats);
        for (std::size_t i = 0; i < d.blocks[root].size(); ++i)
            out.colour[d.blocks[root][i]] = c->colour[i];
    }

    // Replay outward: each frame's cut vertex is coloured by the time the
    // frame is replayed (parents precede children).
    for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
        int u = it->cut;
        if (out.colour[u] < 0) throw InternalError("block peeling replay out of order");
        std::vector<int> body;
        for (int v : d.blocks[it->block])
            if (v != u) body.push_back(v);
        auto c = solve_block_body(g, body, lists, u, out.colour[u], sub);
        if (!c) throw InternalError("survivor colour lost during block replay");
        for (std::size_t i = 0; i < body.size(); ++i) out.colour[body[i]] = c->colour[i];
    }
    return SolveResult::found(std::move(out), "block-peeling", stats);
}

// ---- solve_gallai_tree ----

SolveResult solve_gallai_tree(const Instance& inst0) {
    bool pre_conflict = false;
    Instance inst = fold_or_same(inst0, &pre_conflict);
    if (pre_conflict) return SolveResult::none("gallai-tree");
    const Graph& g = inst.graph();
    SolveStats stats;
    Colouring out;
    out.colour.assign(g.vertex_count(), -1);
    auto sub = default_block_solver();
    for (const auto& comp : g.components()) {
        Graph cg = g.induced(comp);
        if (!is_gallai_tree(cg).is_gallai_tree)
            throw InputError("solve_gallai_tree: component is not a Gallai tree");
        Instance ci(cg, inst.lists().restricted_to(comp));
        auto r = solve_block_peeling(ci, sub);
        stats.peel_steps += r.stats.peel_steps;
        if (!r.feasible) return SolveResult::none("gallai-tree", stats);
        for (std::size_t i = 0; i < comp.size(); ++i)
            out.colour[comp[i]] = r.colouring->colour[i];
    }
    return SolveResult::found(std::move(out), "gallai-tree", stats);
}

// ---- solve_degree_lists ----

namespace {

// A colouring of a connected component with exact degree lists that is not a
// Gallai tree is guaranteed to exist. Constructive attempt: find z with two
// non-adjacent neighbours x, y sharing a list colour whose removal keeps the
// component connected, colour x and y alike and finish greedily in
// reverse-BFS order towards z (which then has list slack). Falls back to
// exact search (flagged) when no candidate works out.
bool colour_non_gallai_component(const Graph& g, const std::vector<int>& comp,
                                 const RawLists& lists, std::vector<int>& out,
                                 SolveStats& stats) {
    std::vector<bool> in_comp(g.vertex_count(), false);
    for (int v : comp) in_comp[v] = true;

    auto connected_without = [&](int x, int y) {
        // BFS over comp minus {x,y}.
        int start = -1;
        for (int v : comp)
            if (v != x && v != y) {
                start = v;
                break;
            }
        if (start == -1) return false;
        std::vector<bool> seen(g.vertex_count(), false);
        seen[start] = true;
        std::queue<int> q;
        q.push(start);
        int cnt = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v))
                if (in_comp[w] && !seen[w] && w != x && w != y) {
                    seen[w] = true;
                    q.push(w);
                    ++cnt;
                }
        }
        return cnt == static_cast<int>(comp.size()) - 2;
    };

    for (int z : comp) {
        const auto& nb = g.neighbours(z);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (!in_comp[nb[i]]) continue;
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!in_comp[nb[j]]) continue;
                int x = nb[i], y = nb[j];
                if (g.has_edge(x, y)) continue;
                ColourList common;
                std::set_intersection(lists[x].begin(), lists[x].end(), lists[y].begin(),
                                      lists[y].end(), std::back_inserter(common));
                if (common.empty()) continue;
                if (!connected_without(x, y)) continue;
                for (int c : common) {
                    std::vector<int> attempt = out;
                    attempt[x] = c;
                    attempt[y] = c;
                    RawLists reduced = lists;
                    for (int w : g.neighbours(x))
                        if (in_comp[w] && w != y) list_erase(reduced[w], c);
                    for (int w : g.neighbours(y))
                        if (in_comp[w] && w != x) list_erase(reduced[w], c);
                    std::vector<int> rest;
                    for (int v : comp)
                        if (v != x && v != y) rest.push_back(v);
                    if (greedy_reverse_bfs(g, rest, reduced, z, attempt)) {
                        out = std::move(attempt);
                        return true;
                    }
                }
            }
        }
    }

    // Guaranteed-feasible fallback.
    stats.fallback_used = true;
    Graph cg = g.induced(comp);
    RawLists cl;
    for (int v : comp) cl.push_back(lists[v]);
    ExactSolver solver;
    auto r = solver.solve(Instance(cg, ListAssignment(std::move(cl))));
    stats.search_nodes += r.stats.search_nodes;
    if (!r.feasible) return false;
    for (std::size_t i = 0; i < comp.size(); ++i) out[comp[i]] = r.colouring->colour[i];
    return true;
}

} // namespace

SolveResult solve_degree_lists(const Instance& inst0) {
    bool pre_conflict = false;
    Instance inst = fold_or_same(inst0, &pre_conflict);
    if (pre_conflict) return SolveResult::none("degree-lists");
    const Graph& g = inst.graph();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(inst.lists().list(v).size()) < g.degree(v))
            throw InputError("solve_degree_lists requires |L(v)| >= deg(v) for every vertex");

    SolveStats stats;
    PeelResult peel = peel_reducible(inst);
    stats.peel_steps = peel.log.size();

    const Graph& kg = peel.kernel.graph();
    Colouring kernel_col;
    kernel_col.colour.assign(kg.vertex_count(), -1);

    // Peeled vertices are isolated in the kernel; give them their first list
    // colour (restore_colouring recolours them properly afterwards).
    std::vector<bool> remaining(kg.vertex_count(), false);
    for (int v : peel.remaining) remaining[v] = true;
    for (int v = 0; v < kg.vertex_count(); ++v)
        if (!remaining[v]) kernel_col.colour[v] = inst.lists().list(v).front();

    std::vector<bool> visited(kg.vertex_count(), false);
    const RawLists& lists = inst.lists().lists();
    for (int s : peel.remaining) {
        if (visited[s]) continue;
        // Collect the component within the kernel.
        std::vector<int> comp, stack{s};
        visited[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : kg.neighbours(v))
                if (!visited[w]) {
                    visited[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());

        Graph cg = kg.induced(comp);
        auto gallai = is_gallai_tree(cg);
        if (gallai.is_gallai_tree) {
            Instance ci(cg, inst.lists().restricted_to(comp));
            auto r = solve_block_peeling(ci, default_block_solver());
            stats.peel_steps += r.stats.peel_steps;
            if (!r.feasible) return SolveResult::none("degree-lists", stats);
            for (std::size_t i = 0; i < comp.size(); ++i)
                kernel_col.colour[comp[i]] = r.colouring->colour[i];
        } else {
            if (!colour_non_gallai_component(kg, comp, lists, kernel_col.colour, stats))
                throw InternalError(
                    "degree-list component advertised as colourable has no colouring");
        }
    }

    Colouring full = restore_colouring(peel, std::move(kernel_col));
    return SolveResult::found(std::move(full), "degree-lists", stats);
}

// ---- solve_precolouring_extension ----

SolveResult solve_precolouring_extension(const Graph& g, const Precolouring& pre, int k) {
    if (pre.vertex_count() != g.vertex_count())
        throw InputError("precolouring domain does not match the graph");
    if (k < 1) throw InputError("palette must be positive");
    if (pre.palette() != k)
        throw InputError("precolouring palette disagrees with k");
    if (g.max_degree() > k)
        throw InputError("solve_precolouring_extension requires max degree <= k");
    if (!pre.proper_on(g))
        throw InputError("precolouring is not proper");

    int n = g.vertex_count();
    std::vector<int> free_vertices;
    for (int v = 0; v < n; ++v)
        if (!pre.assigned(v)) free_vertices.push_back(v);

    Colouring out;
    out.colour.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (pre.assigned(v)) out.colour[v] = pre.colour(v);

    if (free_vertices.empty())
        return SolveResult::found(std::move(out), "precolouring-extension");

    RawLists sub_lists;
    sub_lists.reserve(free_vertices.size());
    for (int v : free_vertices) {
        ColourList l;
        for (int c = 1; c <= k; ++c) l.push_back(c);
        for (int w : g.neighbours(v))
            if (pre.assigned(w)) list_erase(l, pre.colour(w));
        if (l.empty()) return SolveResult::none("precolouring-extension");
        sub_lists.push_back(std::move(l));
    }

    Graph sub = g.induced(free_vertices);
    auto r = solve_degree_lists(Instance(sub, ListAssignment(std::move(sub_lists))));
    SolveStats stats = r.stats;
    if (!r.feasible) return SolveResult::none("precolouring-extension", stats);
    for (std::size_t i = 0; i < free_vertices.size(); ++i)
        out.colour[free_vertices[i]] = r.colouring->colour[i];
    return SolveResult::found(std::move(out), "precolouring-extension", stats);
}

// ---- classify_and_solve ----

namespace {

bool graph_bipartite(const Graph& g) {
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

} // namespace

std::pair<DispatchReport, SolveResult> classify_and_solve(const Instance& inst) {
    DispatchReport rep;
    rep.has_precolouring = inst.precolouring().has_value();

    bool pre_conflict = false;
    Instance folded = fold_or_same(inst, &pre_conflict);
    const Graph& g = folded.graph();
    const ListAssignment& lists = folded.lists();

    rep.max_list_size = lists.size();
    rep.max_degree = g.max_degree();
    rep.bipartite = graph_bipartite(g);
    int ell = g.vertex_count() > 0 ? static_cast<int>(lists.list(0).size()) : 0;
    rep.lists_regular = g.vertex_count() > 0 && lists.is_regular(ell);
    rep.regularity = rep.lists_regular ? ell : 0;
    rep.all_components_gallai = true;
    for (const auto& comp : g.components())
        if (!is_gallai_tree(g.induced(comp)).is_gallai_tree) {
            rep.all_components_gallai = false;
            break;
        }

    if (pre_conflict) {
        rep.classification = "precolouring conflicts with the lists";
        rep.method = "trivial";
        return {rep, SolveResult::none("trivial")};
    }

    if (rep.max_list_size <= 2) {
        rep.classification = "lists of size at most 2: implication-graph method";
        rep.method = "two-list";
        return {rep, solve_2list(folded)};
    }
    if (rep.max_degree <= 2) {
        rep.classification = "maximum degree at most 2: path/cycle dynamic programming";
        rep.method = "max-degree-2";
        return {rep, solve_max_degree2(folded)};
    }
    if (rep.all_components_gallai) {
        rep.classification = "Gallai-tree components: leaf-block peeling";
        rep.method = "gallai-tree";
        return {rep, solve_gallai_tree(folded)};
    }
    bool degree_lists_ok = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (static_cast<int>(lists.list(v).size()) < g.degree(v)) {
            degree_lists_ok = false;
            break;
        }
    if (degree_lists_ok) {
        if (rep.lists_regular && rep.max_degree <= rep.regularity)
            rep.classification =
                "regular lists of size >= max degree: list version of Brooks' theorem "
                "(Vizing) / degree-list colouring (Borodin; Erdos-Rubin-Taylor)";
        else
            rep.classification =
                "every list at least as large as the degree: degree-list colouring "
                "(Borodin; Erdos-Rubin-Taylor)";
        rep.method = "degree-lists";
        return {rep, solve_degree_lists(folded)};
    }
    if (rep.has_precolouring) {
        int k = inst.precolouring()->palette();
        bool palette_lists = true;
        for (int v = 0; v < inst.graph().vertex_count() && palette_lists; ++v) {
            const auto& l = inst.lists().list(v);
            if (static_cast<int>(l.size()) != k || l.front() != 1 || l.back() != k)
                palette_lists = false;
        }
        if (palette_lists && inst.graph().max_degree() <= k) {
            rep.classification = "precolouring extension with max degree <= palette";
            rep.method = "precolouring-extension";
            return {rep,
                    solve_precolouring_extension(inst.graph(), *inst.precolouring(), k)};
        }
    }

    rep.classification = "no polynomial case matched";
    rep.method = "exact";
    return {rep, solve_exact(folded)};
}

} // namespace listcol
