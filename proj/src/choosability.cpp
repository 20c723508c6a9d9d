#include "listcol/choosability.hpp"

#include <algorithm>

#include "listcol/errors.hpp"
#include "listcol/exact.hpp"

namespace listcol {

namespace {

// Largest submask of `rest` that is numerically <= bound.
std::uint64_t largest_submask_le(std::uint64_t rest, std::uint64_t bound) {
    std::uint64_t res = 0;
    bool tight = true;
    for (int b = 63; b >= 0; --b) {
        std::uint64_t bit = std::uint64_t(1) << b;
        if (!tight) {
            res |= rest & bit;
            continue;
        }
        bool rb = (rest & bit) != 0, bb = (bound & bit) != 0;
        if (bb) {
            if (rb) res |= bit;
            else tight = false; // strictly below the bound from here on
        }
        // bound bit 0: must leave the bit clear while tight
    }
    return res;
}

struct Enumerator {
    const Graph& g;
    int n;
    int ell;
    std::vector<int> cov;                 // remaining coverage per vertex
    std::vector<std::uint64_t> stack;     // chosen occurrence masks, colours 0..
    std::vector<Bits128> lists;           // per-vertex colour masks (incremental)
    const std::function<bool(const std::vector<std::uint64_t>&)>& leaf;
    bool stopped = false;

    Enumerator(const Graph& g, int ell,
               const std::function<bool(const std::vector<std::uint64_t>&)>& leaf)
        : g(g), n(g.vertex_count()), ell(ell), cov(g.vertex_count(), ell),
          lists(g.vertex_count()), leaf(leaf) {}

    void run() {
        if (n == 0) {
            leaf(stack);
            return;
        }
        dfs(~std::uint64_t(0) >> (64 - n));
    }

    void dfs(std::uint64_t prev) {
        if (stopped) return;
        int top = -1;
        std::uint64_t support = 0;
        for (int v = n - 1; v >= 0; --v)
            if (cov[v] > 0) {
                if (top < 0) top = v;
                support |= std::uint64_t(1) << v;
            }
        if (top < 0) {
            if (!leaf(stack)) stopped = true;
            return;
        }
        std::uint64_t base = std::uint64_t(1) << top;
        std::uint64_t rest = support & (base - 1);
        // Masks must contain the top uncovered vertex (otherwise it can never
        // be covered again in a non-increasing sequence) and stay <= prev.
        std::uint64_t sub;
        if (prev >> (top + 1)) {
            // prev has bits above the top vertex; every candidate is smaller.
            sub = rest;
        } else {
            // By the DFS invariant prev >= base, so prev's top bit is `top`.
            sub = largest_submask_le(rest, prev & (base - 1));
        }
        int colour = static_cast<int>(stack.size());
        for (;;) {
            std::uint64_t m = base | sub;
            stack.push_back(m);
            for (int v = 0; v < n; ++v)
                if (m >> v & 1) {
                    --cov[v];
                    lists[v].set(colour);
                }
            dfs(m);
            for (int v = 0; v < n; ++v)
                if (m >> v & 1) {
                    ++cov[v];
                    lists[v].reset(colour);
                }
            stack.pop_back();
            if (stopped || sub == 0) break;
            sub = (sub - 1) & rest;
        }
    }
};

ListAssignment assignment_from_masks(int n, const std::vector<std::uint64_t>& masks) {
    std::vector<ColourList> lists(n);
    for (std::size_t c = 0; c < masks.size(); ++c)
        for (int v = 0; v < n; ++v)
            if (masks[c] >> v & 1) lists[v].push_back(static_cast<int>(c) + 1);
    return ListAssignment(std::move(lists));
}

} // namespace

void enumerate_canonical_assignments(
    const Graph& g, int ell, const std::function<bool(const ListAssignment&)>& cb) {
    if (ell < 1) throw InputError("ell must be at least 1");
    if (g.vertex_count() > 60)
        throw InputError("canonical enumeration supports at most 60 vertices");
    auto leaf = std::function<bool(const std::vector<std::uint64_t>&)>(
        [&](const std::vector<std::uint64_t>& masks) {
            return cb(assignment_from_masks(g.vertex_count(), masks));
        });
    Enumerator e(g, ell, leaf);
    e.run();
}

std::uint64_t count_canonical_assignments(int n, int ell) {
    Graph empty(n, {});
    std::uint64_t count = 0;
    auto leaf = std::function<bool(const std::vector<std::uint64_t>&)>(
        [&](const std::vector<std::uint64_t>&) {
            ++count;
            return true;
        });
    Enumerator e(empty, ell, leaf);
    e.run();
    return count;
}

ChoosabilityResult is_choosable(const Graph& g, int ell, std::uint64_t budget) {
    if (ell < 1) throw InputError("ell must be at least 1");
    int n = g.vertex_count();
    if (n > 60) throw InputError("is_choosable supports at most 60 vertices");
    if (static_cast<long long>(n) * ell > Bits128::capacity)
        throw InputError("colour universe exceeds the exact solver capacity");

    ChoosabilityResult res;
    res.ell = ell;
    if (n == 0) {
        res.verdict = ChoosabilityResult::Verdict::choosable;
        return res;
    }

    std::vector<Bits128> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].set(v);
        adj[v].set(u);
    }
    DenseCore core(n, adj);

    bool witness_found = false;
    // The feasibility check reads the enumerator's incremental list masks
    // directly instead of rebuilding an assignment per leaf.
    Enumerator* active = nullptr;
    bool budget_hit = false;
    auto check = std::function<bool(const std::vector<std::uint64_t>&)>(
        [&](const std::vector<std::uint64_t>& masks) {
            if (budget && res.assignments_tested >= budget) {
                budget_hit = true;
                return false;
            }
            ++res.assignments_tested;
            if (!core.feasible(active->lists)) {
                res.witness = assignment_from_masks(n, masks);
                witness_found = true;
                return false;
            }
            return true;
        });
    Enumerator e(g, ell, check);
    active = &e;
    e.run();

    if (witness_found)
        res.verdict = ChoosabilityResult::Verdict::not_choosable;
    else if (budget_hit)
        res.verdict = ChoosabilityResult::Verdict::budget_exceeded;
    else
        res.verdict = ChoosabilityResult::Verdict::choosable;
    return res;
}

Graph choosability_peel(const Graph& g, int ell) {
    if (ell < 1) throw InputError("ell must be at least 1");
    std::vector<int> keep(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) keep[v] = v;
    Graph cur = g;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < cur.vertex_count(); ++v)
            if (cur.degree(v) < ell) {
                pick = v;
                break;
            }
        if (pick == -1) return cur;
        cur = cur.with_vertex_removed(pick);
    }
}

} // namespace listcol
