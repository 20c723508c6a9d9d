#include "listcol/exact.hpp"

#include <algorithm>

#include "listcol/errors.hpp"

namespace listcol {

DenseInstance DenseInstance::from(const Instance& inst, bool* infeasible_by_precolouring) {
    if (infeasible_by_precolouring) *infeasible_by_precolouring = false;
    const Graph& g = inst.graph();
    int n = g.vertex_count();
    if (n > Bits128::capacity)
        throw InputError("exact solver supports at most 128 vertices");

    auto effective = inst.effective_lists();
    if (!effective) {
        if (!infeasible_by_precolouring)
            throw InputError("precolouring conflicts with the lists");
        *infeasible_by_precolouring = true;
        return {};
    }

    std::vector<int> universe = effective->colour_universe();
    if (static_cast<int>(universe.size()) > Bits128::capacity)
        throw InputError("exact solver supports at most 128 distinct colours");

    DenseInstance d;
    d.n = n;
    d.colour_values = universe;
    d.adj.assign(n, {});
    for (auto [u, v] : g.edges()) {
        d.adj[u].set(v);
        d.adj[v].set(u);
    }
    d.lists.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int c : effective->list(v)) {
            auto it = std::lower_bound(universe.begin(), universe.end(), c);
            d.lists[v].set(static_cast<int>(it - universe.begin()));
        }
    return d;
}

Colouring DenseInstance::to_colouring(const std::vector<int>& compact) const {
    Colouring c;
    c.colour.resize(n);
    for (int v = 0; v < n; ++v) c.colour[v] = colour_values[compact[v]];
    return c;
}

DenseCore::DenseCore(int n, const std::vector<Bits128>& adjacency_masks,
                     std::uint64_t node_budget)
    : n_(n), adj_(adjacency_masks), budget_(node_budget) {}

// Unit propagation followed by branching on a smallest list. `done` marks
// vertices whose (singleton) colour has already been pushed to neighbours.
// on_solution returns false to keep searching, true to stop the whole search.
bool DenseCore::search(std::vector<Bits128>& lists, Bits128 done, int depth,
                       const std::function<bool(const std::vector<Bits128>&)>& on_solution) const {
    if (budget_ && ++nodes_ > budget_)
        throw BudgetExceeded("exact solver node budget exceeded");

    // Propagate all singleton lists.
    for (;;) {
        int unit = -1;
        for (int v = 0; v < n_; ++v) {
            if (done.test(v)) continue;
            int sz = lists[v].count();
            if (sz == 0) return false;
            if (sz == 1) {
                unit = v;
                break;
            }
        }
        if (unit == -1) break;
        done.set(unit);
        int c = lists[unit].first();
        for (int w = adj_[unit].first(); w >= 0; w = adj_[unit].next(w)) {
            if (done.test(w)) continue;
            if (lists[w].test(c)) {
                lists[w].reset(c);
                if (lists[w].empty()) return false;
            }
        }
    }

    // Pick an undone vertex with the smallest list.
    int pick = -1, best = Bits128::capacity + 1;
    for (int v = 0; v < n_; ++v) {
        if (done.test(v)) continue;
        int sz = lists[v].count();
        if (sz < best) {
            best = sz;
            pick = v;
        }
    }
    if (pick == -1) return on_solution(lists);

    Bits128 options = lists[pick];
    auto& scratch = pool_[depth];
    scratch.resize(n_);
    for (int c = options.first(); c >= 0; c = options.next(c)) {
        for (int v = 0; v < n_; ++v) scratch[v] = lists[v];
        scratch[pick] = Bits128{};
        scratch[pick].set(c);
        if (search(scratch, done, depth + 1, on_solution)) return true;
    }
    return false;
}

bool DenseCore::feasible(const std::vector<Bits128>& lists) const {
    pool_.resize(n_ + 1);
    auto work = lists;
    return search(work, Bits128{}, 0, [](const std::vector<Bits128>&) { return true; });
}

bool DenseCore::find(const std::vector<Bits128>& lists, std::vector<int>* out) const {
    pool_.resize(n_ + 1);
    auto work = lists;
    bool ok = search(work, Bits128{}, 0, [&](const std::vector<Bits128>& sol) {
        if (out) {
            out->resize(n_);
            for (int v = 0; v < n_; ++v) (*out)[v] = sol[v].first();
        }
        return true;
    });
    return ok;
}

void DenseCore::enumerate(const std::vector<Bits128>& lists,
                          const std::function<bool(const std::vector<int>&)>& cb) const {
    pool_.resize(n_ + 1);
    auto work = lists;
    std::vector<int> sol(n_);
    search(work, Bits128{}, 0, [&](const std::vector<Bits128>& s) {
        for (int v = 0; v < n_; ++v) sol[v] = s[v].first();
        return !cb(sol); // cb false -> stop -> search returns true
    });
}

SolveResult ExactSolver::solve(const Instance& inst) const {
    bool pre_conflict = false;
    DenseInstance d = DenseInstance::from(inst, &pre_conflict);
    SolveStats stats;
    if (pre_conflict) return SolveResult::none("exact", stats);

    DenseCore core(d.n, d.adj, budget_);
    std::vector<int> compact;
    bool ok = core.find(d.lists, &compact);
    stats.search_nodes = core.nodes_used();
    if (!ok) return SolveResult::none("exact", stats);
    return SolveResult::found(d.to_colouring(compact), "exact", stats);
}

bool ExactSolver::feasible(const Instance& inst) const {
    bool pre_conflict = false;
    DenseInstance d = DenseInstance::from(inst, &pre_conflict);
    if (pre_conflict) return false;
    return DenseCore(d.n, d.adj, budget_).feasible(d.lists);
}

void ExactSolver::enumerate(const Instance& inst,
                            const std::function<bool(const Colouring&)>& cb) const {
    bool pre_conflict = false;
    DenseInstance d = DenseInstance::from(inst, &pre_conflict);
    if (pre_conflict) return;
    DenseCore core(d.n, d.adj, budget_);
    core.enumerate(d.lists, [&](const std::vector<int>& compact) {
        return cb(d.to_colouring(compact));
    });
}

} // namespace listcol
