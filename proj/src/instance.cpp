#include "listcol/instance.hpp"

#include <algorithm>
#include <set>

#include "listcol/errors.hpp"

namespace listcol {

ListAssignment::ListAssignment(std::vector<ColourList> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty()) throw InputError("every colour list must be non-empty");
        if (l.front() < 0) throw InputError("colours must be non-negative");
    }
}

ListAssignment ListAssignment::uniform(int n, ColourList colours) {
    if (n < 0) throw InputError("uniform: negative vertex count");
    return ListAssignment(std::vector<ColourList>(n, std::move(colours)));
}

bool ListAssignment::contains(int v, int colour) const {
    const auto& l = lists_[v];
    return std::binary_search(l.begin(), l.end(), colour);
}

int ListAssignment::size() const {
    std::size_t m = 0;
    for (const auto& l : lists_) m = std::max(m, l.size());
    return static_cast<int>(m);
}

bool ListAssignment::is_regular(int ell) const {
    for (const auto& l : lists_)
        if (static_cast<int>(l.size()) != ell) return false;
    return true;
}

std::vector<int> ListAssignment::colour_universe() const {
    std::vector<int> u;
    for (const auto& l : lists_) u.insert(u.end(), l.begin(), l.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

ListAssignment ListAssignment::restricted_to(const std::vector<int>& keep) const {
    std::vector<ColourList> out;
    out.reserve(keep.size());
    for (int v : keep) out.push_back(lists_[v]);
    return ListAssignment(std::move(out));
}

ListAssignment ListAssignment::with_colour_removed(int v, int colour) const {
    auto ls = lists_;
    auto& l = ls[v];
    l.erase(std::remove(l.begin(), l.end(), colour), l.end());
    if (l.empty()) throw InputError("removing colour would empty a list");
    return ListAssignment(std::move(ls));
}

ListAssignment ListAssignment::with_list(int v, ColourList colours) const {
    auto ls = lists_;
    ls[v] = std::move(colours);
    return ListAssignment(std::move(ls));
}

Precolouring::Precolouring(std::vector<int> assignment, int k)
    : assignment_(std::move(assignment)), k_(k) {
    if (k_ < 1) throw InputError("precolouring palette must be positive");
    for (int c : assignment_)
        if (c >= 0 && (c < 1 || c > k_))
            throw InputError("precoloured colour outside 1..k");
}

std::vector<int> Precolouring::domain() const {
    std::vector<int> w;
    for (int v = 0; v < vertex_count(); ++v)
        if (assigned(v)) w.push_back(v);
    return w;
}

bool Precolouring::proper_on(const Graph& g) const {
    for (auto [u, v] : g.edges())
        if (assigned(u) && assigned(v) && colour(u) == colour(v)) return false;
    return true;
}

Instance::Instance(Graph g, ListAssignment lists)
    : graph_(std::move(g)), lists_(std::move(lists)) {
    if (lists_.vertex_count() != graph_.vertex_count())
        throw InputError("list assignment does not cover the vertex set");
}

Instance::Instance(Graph g, ListAssignment lists, Precolouring pre)
    : graph_(std::move(g)), lists_(std::move(lists)), pre_(std::move(pre)) {
    if (lists_.vertex_count() != graph_.vertex_count())
        throw InputError("list assignment does not cover the vertex set");
    if (pre_->vertex_count() != graph_.vertex_count())
        throw InputError("precolouring domain does not match the vertex set");
    if (!pre_->proper_on(graph_))
        throw InputError("precolouring is not proper");
}

std::optional<ListAssignment> Instance::effective_lists() const {
    if (!pre_) return lists_;
    std::vector<ColourList> ls;
    ls.reserve(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) {
        if (pre_->assigned(v)) {
            int c = pre_->colour(v);
            if (!lists_.contains(v, c)) return std::nullopt;
            ls.push_back({c});
        } else {
            ls.push_back(lists_.list(v));
        }
    }
    return ListAssignment(std::move(ls));
}

bool check_colouring(const Instance& inst, const Colouring& c) {
    const Graph& g = inst.graph();
    if (c.size() != g.vertex_count())
        throw InputError("colouring does not cover the vertex set");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!inst.lists().contains(v, c[v])) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    if (inst.precolouring()) {
        const auto& pre = *inst.precolouring();
        for (int v = 0; v < g.vertex_count(); ++v)
            if (pre.assigned(v) && c[v] != pre.colour(v)) return false;
    }
    return true;
}

PeelResult peel_reducible(const Instance& inst) {
    if (inst.precolouring())
        throw InputError("peel_reducible expects a list-only instance");
    const Graph& g = inst.graph();
    int n = g.vertex_count();

    std::vector<bool> removed(n, false);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    PeelLog log;
    // Deterministic: always remove the lowest-indexed qualifying vertex.
    auto qualifies = [&](int v) {
        return deg[v] < static_cast<int>(inst.lists().list(v).size());
    };
    std::set<int> queue;
    for (int v = 0; v < n; ++v)
        if (qualifies(v)) queue.insert(v);
    while (!queue.empty()) {
        int pick = *queue.begin();
        queue.erase(queue.begin());
        PeelStep step;
        step.vertex = pick;
        for (int w : g.neighbours(pick))
            if (!removed[w]) step.neighbours.push_back(w);
        step.list = inst.lists().list(pick);
        log.push_back(std::move(step));
        removed[pick] = true;
        for (int w : g.neighbours(pick))
            if (!removed[w]) {
                --deg[w];
                if (qualifies(w)) queue.insert(w);
            }
    }

    std::vector<int> remaining;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) remaining.push_back(v);

    std::vector<Edge> kept;
    for (auto [u, v] : g.edges())
        if (!removed[u] && !removed[v]) kept.push_back({u, v});

    PeelResult res;
    res.kernel = Instance(Graph(n, std::move(kept)), inst.lists());
    res.log = std::move(log);
    res.remaining = std::move(remaining);
    return res;
}

Colouring restore_colouring(const PeelResult& peel, Colouring kernelColouring) {
    if (!check_colouring(peel.kernel, kernelColouring))
        throw InputError("kernel colouring is not valid for the kernel");
    Colouring c = std::move(kernelColouring);
    for (auto it = peel.log.rbegin(); it != peel.log.rend(); ++it) {
        int chosen = -1;
        for (int col : it->list) {
            bool clash = false;
            for (int w : it->neighbours)
                if (c.colour[w] == col) {
                    clash = true;
                    break;
                }
            if (!clash) {
                chosen = col;
                break;
            }
        }
        if (chosen == -1)
            throw InternalError("peel invariant violated: no free colour on restore");
        c.colour[it->vertex] = chosen;
    }
    return c;
}

} // namespace listcol
