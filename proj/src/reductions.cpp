#include "listcol/reductions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>

#include "listcol/errors.hpp"
#include "listcol/exact.hpp"
#include "listcol/structure.hpp"

namespace listcol {

// ---- verified inputs ----

CounterexamplePair CounterexamplePair::verified(Graph f, ListAssignment lists) {
    CounterexamplePair p;
    if (lists.vertex_count() != f.vertex_count())
        throw InputError("counterexample lists do not match the graph");
    int ell = f.vertex_count() > 0 ? static_cast<int>(lists.list(0).size()) : 0;
    if (!lists.is_regular(ell))
        throw InputError("counterexample lists must be regular");
    if (ExactSolver().feasible(Instance(f, lists)))
        throw InputError("counterexample pair is colourable");
    p.graph = std::move(f);
    p.lists = std::move(lists);
    p.ell = ell;
    return p;
}

GadgetSpec GadgetSpec::verified(Graph f_prime, ListAssignment lists, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= f_prime.vertex_count() ||
        v >= f_prime.vertex_count())
        throw InputError("gadget endpoints out of range");
    if (f_prime.has_edge(u, v))
        throw InputError("gadget endpoints must be non-adjacent in F'");
    if (lists.vertex_count() != f_prime.vertex_count())
        throw InputError("gadget lists do not match F'");
    int ell = static_cast<int>(lists.list(0).size());
    if (!lists.is_regular(ell))
        throw InputError("gadget lists must be regular");

    ColourList forced;
    bool alike = true;
    ExactSolver().enumerate(Instance(f_prime, lists), [&](const Colouring& c) {
        if (c[u] != c[v]) {
            alike = false;
            return false;
        }
        if (!std::binary_search(forced.begin(), forced.end(), c[u]))
            forced.insert(std::lower_bound(forced.begin(), forced.end(), c[u]), c[u]);
        return true;
    });
    if (!alike)
        throw InputError("gadget endpoints are not forced alike");
    if (forced.empty())
        throw InputError("F' admits no respecting colouring");

    GadgetSpec g;
    g.f_prime = std::move(f_prime);
    g.lists = std::move(lists);
    g.u = u;
    g.v = v;
    g.forced = std::move(forced);
    g.ell = ell;
    return g;
}

CounterexamplePair minimize_counterexample(CounterexamplePair pair) {
    ExactSolver oracle;
    if (oracle.feasible(Instance(pair.graph, pair.lists)))
        throw InputError("minimize_counterexample: the pair is colourable");

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < pair.graph.vertex_count() && !changed; ++v) {
            Graph g2 = pair.graph.with_vertex_removed(v);
            std::vector<int> keep;
            for (int w = 0; w < pair.graph.vertex_count(); ++w)
                if (w != v) keep.push_back(w);
            ListAssignment l2 = pair.lists.restricted_to(keep);
            if (!oracle.feasible(Instance(g2, l2))) {
                pair.graph = std::move(g2);
                pair.lists = std::move(l2);
                changed = true;
            }
        }
        if (changed) continue;
        for (auto e : pair.graph.edges()) {
            Graph g2 = pair.graph.with_edge_removed(e.first, e.second);
            if (!oracle.feasible(Instance(g2, pair.lists))) {
                pair.graph = std::move(g2);
                changed = true;
                break;
            }
        }
    }
    if (pair.graph.vertex_count() > 1 && !pair.graph.is_connected())
        throw InternalError("minimal counterexample came out disconnected");
    return pair;
}

GadgetSpec make_gadget(const CounterexamplePair& pair, Edge e) {
    if (!pair.graph.has_edge(e.first, e.second))
        throw InputError("make_gadget: e is not an edge of F");

    // Enforce the minimality precondition: every single removal colourable.
    ExactSolver oracle;
    for (int v = 0; v < pair.graph.vertex_count(); ++v) {
        Graph g2 = pair.graph.with_vertex_removed(v);
        std::vector<int> keep;
        for (int w = 0; w < pair.graph.vertex_count(); ++w)
            if (w != v) keep.push_back(w);
        if (!oracle.feasible(Instance(g2, pair.lists.restricted_to(keep))))
            throw InputError("make_gadget: pair is not removal-minimal (vertex)");
    }
    for (auto f : pair.graph.edges()) {
        Graph g2 = pair.graph.with_edge_removed(f.first, f.second);
        if (!oracle.feasible(Instance(g2, pair.lists)))
            throw InputError("make_gadget: pair is not removal-minimal (edge)");
    }

    try {
        return GadgetSpec::verified(pair.graph.with_edge_removed(e.first, e.second),
                                    pair.lists, e.first, e.second);
    } catch (const InputError& err) {
        // Minimality makes the forcing properties a theorem; a failure here
        // means the preceding checks and the enumeration disagree.
        throw InternalError(std::string("gadget construction inconsistent: ") + err.what());
    }
}

// ---- canned gadgets ----

CounterexamplePair k4_counterexample() {
    return CounterexamplePair::verified(complete_graph(4),
                                        ListAssignment::uniform(4, {1, 2, 3}));
}

namespace {

// A complete sink clique on `sink` vertices consumes its whole uniform list,
// pinning every attached vertex to the low colours of its own list.
GadgetSpec pinned_gadget(int sink, int pinned, ColourList sink_list, ColourList pin_list,
                         std::vector<Edge> pin_edges, Edge removed) {
    std::vector<Edge> edges;
    for (int i = 0; i < sink; ++i)
        for (int j = i + 1; j < sink; ++j) edges.push_back({i, j});
    for (int p = 0; p < pinned; ++p)
        for (int i = 0; i < sink; ++i) edges.push_back({sink + p, i});
    for (auto [a, b] : pin_edges) edges.push_back({sink + a, sink + b});

    int n = sink + pinned;
    Graph f(n, edges);
    std::vector<ColourList> lists;
    for (int i = 0; i < sink; ++i) lists.push_back(sink_list);
    for (int p = 0; p < pinned; ++p) lists.push_back(pin_list);

    auto pair = minimize_counterexample(
        CounterexamplePair::verified(std::move(f), ListAssignment(std::move(lists))));
    if (pair.graph.vertex_count() != n)
        throw InternalError("synthetic gadget pair was not removal-minimal");
    return make_gadget(pair, {sink + removed.first, sink + removed.second});
}

} // namespace

GadgetSpec synthetic_gadget_3reg(int t) {
    switch (t) {
    case 1:
        // K3 sink {5,6,7}; u, v pinned to {4}; removed edge uv.
        return pinned_gadget(3, 2, {5, 6, 7}, {4, 5, 6}, {{0, 1}}, {0, 1});
    case 2:
        // K3 sink {6,7,8}; u - z - v pinned to {4,5}; removed edge uv.
        return pinned_gadget(3, 3, {6, 7, 8}, {4, 5, 6}, {{0, 1}, {1, 2}, {0, 2}}, {0, 2});
    default:
        throw InputError("synthetic_gadget_3reg: t must be 1 or 2");
    }
}

GadgetSpec synthetic_gadget_4reg(int t) {
    switch (t) {
    case 1:
        return pinned_gadget(4, 2, {5, 6, 7, 8}, {4, 5, 6, 7}, {{0, 1}}, {0, 1});
    case 2:
        return pinned_gadget(4, 3, {6, 7, 8, 9}, {4, 5, 6, 7}, {{0, 1}, {1, 2}, {0, 2}},
                             {0, 2});
    case 3:
        // u, z1, z2, v pinned to {4,5,6}; u adjacent to z1, z2; z1, z2
        // adjacent to each other and to v; removed edge uv.
        return pinned_gadget(4, 4, {7, 8, 9, 10}, {4, 5, 6, 7},
                             {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 3}}, {0, 3});
    default:
        throw InputError("synthetic_gadget_4reg: t must be 1, 2 or 3");
    }
}

GadgetSpec synthetic_gadget_toy() {
    auto pair = CounterexamplePair::verified(cycle_graph(3),
                                             ListAssignment::uniform(3, {4, 5}));
    return make_gadget(pair, {0, 2});
}

// ---- digest ----

std::uint64_t instance_digest(const Instance& inst) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    const Graph& g = inst.graph();
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    mix(static_cast<std::uint64_t>(g.edge_count()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u) + 1);
        mix(static_cast<std::uint64_t>(v) + 1);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& l = inst.lists().list(v);
        mix(l.size());
        for (int c : l) mix(static_cast<std::uint64_t>(c) + 17);
    }
    if (inst.precolouring()) {
        mix(0xBEEF);
        mix(static_cast<std::uint64_t>(inst.precolouring()->palette()));
        for (int v = 0; v < g.vertex_count(); ++v)
            mix(static_cast<std::uint64_t>(inst.precolouring()->raw()[v] + 2));
    }
    return h;
}

// ---- claim plumbing ----

std::string Claim::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::list_regular: os << "list-regular " << value; break;
    case Kind::list_sizes_in: {
        os << "list-sizes-in";
        for (int s : values) os << ' ' << s;
        break;
    }
    case Kind::girth_at_least: os << "girth-at-least " << value; break;
    case Kind::max_degree_at_most: os << "max-degree-at-most " << value; break;
    case Kind::subgraph_absent: os << "subgraph-absent " << pattern; break;
    case Kind::planar: os << "planar " << (flag ? "true" : "false"); break;
    case Kind::lists_template: os << "lists-template (" << expected_lists.size() << " vertices)"; break;
    case Kind::precolour_template: os << "precolour-template (" << expected_colours.size() << " vertices)"; break;
    case Kind::edges_present: os << "edges-present (" << edges.size() << " edges)"; break;
    case Kind::non_gadget_girth: os << "non-gadget-girth " << value << " (" << edges.size() << " joints)"; break;
    }
    return os.str();
}

namespace {

Claim claim_regular(int ell) {
    Claim c;
    c.kind = Claim::Kind::list_regular;
    c.value = ell;
    return c;
}
Claim claim_sizes(std::vector<int> sizes) {
    Claim c;
    c.kind = Claim::Kind::list_sizes_in;
    c.values = std::move(sizes);
    return c;
}
Claim claim_girth(int p) {
    Claim c;
    c.kind = Claim::Kind::girth_at_least;
    c.value = p;
    return c;
}
Claim claim_max_degree(int d) {
    Claim c;
    c.kind = Claim::Kind::max_degree_at_most;
    c.value = d;
    return c;
}
Claim claim_absent(std::string pattern) {
    Claim c;
    c.kind = Claim::Kind::subgraph_absent;
    c.pattern = std::move(pattern);
    return c;
}
Claim claim_planar(bool expected) {
    Claim c;
    c.kind = Claim::Kind::planar;
    c.flag = expected;
    return c;
}
Claim claim_template(std::vector<std::pair<int, ColourList>> tmpl) {
    Claim c;
    c.kind = Claim::Kind::lists_template;
    c.expected_lists = std::move(tmpl);
    return c;
}
Claim claim_precolour(std::vector<std::pair<int, int>> expected) {
    Claim c;
    c.kind = Claim::Kind::precolour_template;
    c.expected_colours = std::move(expected);
    return c;
}
Claim claim_edges(std::vector<Edge> edges) {
    Claim c;
    c.kind = Claim::Kind::edges_present;
    c.edges = std::move(edges);
    return c;
}
Claim claim_non_gadget_girth(int bound, std::vector<Edge> joints) {
    Claim c;
    c.kind = Claim::Kind::non_gadget_girth;
    c.value = bound;
    c.edges = std::move(joints);
    return c;
}

// ---- output assembly ----

struct OutputBuilder {
    std::vector<Edge> edges;
    std::vector<ColourList> lists;
    std::vector<std::pair<int, ColourList>> built; // template entries

    int vertex_count() const { return static_cast<int>(lists.size()); }
    int add_vertex(ColourList l, bool record = true) {
        lists.push_back(std::move(l));
        int id = vertex_count() - 1;
        if (record) built.push_back({id, lists[id]});
        return id;
    }
    void set_list(int v, ColourList l, bool record = true) {
        lists[v] = std::move(l);
        if (record) built.push_back({v, lists[v]});
    }
    void add_edge(int a, int b) { edges.push_back({a, b}); }

    Instance finish() const {
        return Instance(Graph(vertex_count(), edges), ListAssignment(lists));
    }
};

// Order-preserving colour bijection taking the gadget's forced set onto
// t_target (and, when given, u's list onto u_list_target); every other
// colour becomes a fresh one.
std::map<int, int> gadget_renaming(const GadgetSpec& g, const ColourList& t_target,
                                   const std::optional<ColourList>& u_list_target,
                                   int& fresh) {
    if (static_cast<int>(t_target.size()) != g.t())
        throw InputError("renaming target has the wrong size for T");
    std::map<int, int> sigma;
    for (std::size_t i = 0; i < t_target.size(); ++i) sigma[g.forced[i]] = t_target[i];
    if (u_list_target) {
        const ColourList& lu = g.lists.list(g.u);
        if (u_list_target->size() != lu.size())
            throw InputError("renaming target has the wrong size for L(u)");
        ColourList src, dst;
        std::set_difference(lu.begin(), lu.end(), g.forced.begin(), g.forced.end(),
                            std::back_inserter(src));
        std::set_difference(u_list_target->begin(), u_list_target->end(), t_target.begin(),
                            t_target.end(), std::back_inserter(dst));
        if (src.size() != dst.size())
            throw InputError("u-list renaming target must contain T");
        for (std::size_t i = 0; i < src.size(); ++i) sigma[src[i]] = dst[i];
    }
    for (int c : g.lists.colour_universe())
        if (!sigma.count(c)) sigma[c] = fresh++;
    return sigma;
}

// Inserts a renamed copy of F'. When identify_u_with >= 0, the copy's u is
// mapped onto that existing output vertex (whose list is overwritten with
// the renamed u list); otherwise u becomes a new vertex. Returns the output
// ids of u and v.
std::pair<int, int> insert_copy(OutputBuilder& out, const GadgetSpec& g,
                                const std::map<int, int>& sigma, int identify_u_with) {
    auto renamed = [&](int vertex) {
        ColourList l;
        for (int c : g.lists.list(vertex)) l.push_back(sigma.at(c));
        std::sort(l.begin(), l.end());
        return l;
    };
    std::vector<int> id(g.f_prime.vertex_count(), -1);
    for (int x = 0; x < g.f_prime.vertex_count(); ++x) {
        if (x == g.u && identify_u_with >= 0) {
            id[x] = identify_u_with;
            out.set_list(identify_u_with, renamed(x));
        } else {
            id[x] = out.add_vertex(renamed(x));
        }
    }
    for (auto [a, b] : g.f_prime.edges()) out.add_edge(id[a], id[b]);
    return {id[g.u], id[g.v]};
}

bool allowed_cc_list(const ColourList& l) {
    static const std::vector<ColourList> allowed{{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
    return std::find(allowed.begin(), allowed.end(), l) != allowed.end();
}

void require_cc_lists(const Instance& seed, const char* who) {
    for (int v = 0; v < seed.vertex_count(); ++v)
        if (!allowed_cc_list(seed.lists().list(v)))
            throw InputError(std::string(who) +
                             ": seed lists must be {1,2}, {1,3}, {2,3} or {1,2,3}");
    if (seed.precolouring())
        throw InputError(std::string(who) + ": seed must not carry a precolouring");
}

int fresh_start(const Instance& seed) {
    int mx = 5;
    auto uni = seed.lists().colour_universe();
    if (!uni.empty()) mx = std::max(mx, uni.back());
    return mx + 1;
}

} // namespace

// ---- builders ----

BuiltInstance build_girth_lift(const Instance& seed, int p) {
    require_cc_lists(seed, "build_girth_lift");
    if (p < 3) throw InputError("build_girth_lift: p must be at least 3");
    const Graph& g = seed.graph();
    for (auto [x, y] : g.edges())
        if (seed.lists().list(x).size() != 2 && seed.lists().list(y).size() != 2)
            throw InputError(
                "build_girth_lift: every edge needs an endpoint with a 2-list");

    // Smallest odd path length that lifts any cycle (length >= 3) to >= p.
    int lambda = (p + 2) / 3;
    if (lambda % 2 == 0) ++lambda;
    if (lambda < 1) lambda = 1;

    OutputBuilder out;
    for (int v = 0; v < g.vertex_count(); ++v)
        out.add_vertex(seed.lists().list(v), /*record=*/false);
    for (auto [x, y] : g.edges()) {
        // Interior vertices borrow the list of the first endpoint that has a
        // 2-list.
        ColourList interior = seed.lists().list(x).size() == 2 ? seed.lists().list(x)
                                                               : seed.lists().list(y);
        int prev = x;
        for (int i = 1; i < lambda; ++i) {
            int w = out.add_vertex(interior);
            out.add_edge(prev, w);
            prev = w;
        }
        out.add_edge(prev, y);
    }

    BuiltInstance b{out.finish(), {}};
    auto& cert = b.certificate;
    cert.construction = "girth-lift";
    cert.params["p"] = p;
    cert.params["lambda"] = lambda;
    cert.seed_digest = instance_digest(seed);
    cert.claims.push_back(claim_girth(p));
    cert.claims.push_back(claim_sizes({2, 3}));
    cert.claims.push_back(claim_planar(is_planar(seed.graph())));
    cert.claims.push_back(claim_template(out.built));
    return b;
}

BuiltInstance build_3reg_case1(const Graph& seed, const GadgetSpec& gadget, int r) {
    if (r < 1) throw InputError("build_3reg_case1: r must be positive");
    if (gadget.ell != 3)
        throw InputError("build_3reg_case1: gadget lists must be 3-regular");
    // Case 1 needs a uniform assignment on F (hence on F').
    const ColourList base = gadget.lists.list(0);
    for (int v = 0; v < gadget.lists.vertex_count(); ++v)
        if (gadget.lists.list(v) != base)
            throw InputError("build_3reg_case1: gadget lists must be uniform");
    if (gadget.forced != base)
        throw InternalError("uniform gadget must force its full list");

    int s = (r + 5) / 6;
    int fresh = 1000; // unused: uniform gadgets have no extra colours
    auto sigma = gadget_renaming(gadget, {1, 2, 3}, ColourList{1, 2, 3}, fresh);

    OutputBuilder out;
    for (int v = 0; v < seed.vertex_count(); ++v)
        out.add_vertex({1, 2, 3}, /*record=*/false);

    std::vector<Edge> joints;
    for (auto [x, y] : seed.edges()) {
        int prev_u = x;
        int last_v = -1;
        for (int i = 0; i < s; ++i) {
            auto [cu, cv] = insert_copy(out, gadget, sigma, prev_u);
            (void)cu;
            last_v = cv;
            prev_u = cv; // v_i is identified with u_{i+1}
        }
        out.add_edge(last_v, y);
        joints.push_back({last_v, y});
    }

    BuiltInstance b{out.finish(), {}};
    auto& cert = b.certificate;
    cert.construction = "3reg-case1";
    cert.params["r"] = r;
    cert.params["s"] = s;
    cert.seed_digest = instance_digest(Instance(seed, ListAssignment::uniform(
                                                          seed.vertex_count(), {1, 2, 3})));
    cert.claims.push_back(claim_regular(3));
    cert.claims.push_back(claim_planar(
        is_planar(seed) && (seed.edge_count() == 0 || is_planar(gadget.f_prime))));
    cert.claims.push_back(claim_non_gadget_girth(3 * (2 * s + 1), joints));
    cert.claims.push_back(claim_template(out.built));
    cert.notes.push_back("chain mode: u identified, v chained, closing edge per seed edge");
    return b;
}

namespace {

// Shared core of build_3reg_case2 and build_butterfly_safe.
BuiltInstance case2_core(const Instance& seed, const GadgetSpec& gadget, int r,
                         const char* name) {
    require_cc_lists(seed, name);
    if (r < 2) throw InputError(std::string(name) + ": r must be at least 2");
    int t = gadget.t();
    if (t != 1 && t != 2)
        throw InputError(std::string(name) + ": gadget must have t in {1,2}");

    int s = (r % 2 == 0) ? r : r + 1;
    int fresh = fresh_start(seed);
    int copies = 0;

    OutputBuilder out;
    const Graph& g = seed.graph();
    for (int v = 0; v < g.vertex_count(); ++v)
        out.add_vertex(seed.lists().list(v), /*record=*/false);
    for (auto e : g.edges()) out.add_edge(e.first, e.second);

    for (int w = 0; w < g.vertex_count(); ++w) {
        if (seed.lists().list(w).size() != 2) continue; // only bivertices change
        ++copies;
        if (t == 1) {
            auto sigma = gadget_renaming(gadget, {4}, std::nullopt, fresh);
            auto [cu, cv] = insert_copy(out, gadget, sigma, -1);
            (void)cv;
            out.add_edge(w, cu);
        } else {
            std::vector<int> us;
            for (int i = 0; i < s; ++i) {
                auto sigma = gadget_renaming(gadget, {4, 5}, std::nullopt, fresh);
                auto [cu, cv] = insert_copy(out, gadget, sigma, -1);
                (void)cv;
                us.push_back(cu);
            }
            out.add_edge(w, us.front());
            for (int i = 0; i + 1 < s; ++i) out.add_edge(us[i], us[i + 1]);
            out.add_edge(us.back(), w);
        }
        ColourList lw = seed.lists().list(w);
        lw.push_back(4);
        std::sort(lw.begin(), lw.end());
        out.set_list(w, std::move(lw));
    }

    BuiltInstance b{out.finish(), {}};
    auto& cert = b.certificate;
    cert.construction = name;
    cert.params["r"] = r;
    cert.params["s"] = s;
    cert.params["t"] = t;
    cert.seed_digest = instance_digest(seed);
    if (gadget.ell == 3) cert.claims.push_back(claim_regular(3));
    else cert.claims.push_back(claim_sizes({gadget.ell, 3}));
    cert.claims.push_back(claim_planar(is_planar(seed.graph()) &&
                                       (copies == 0 || is_planar(gadget.f_prime))));
    cert.claims.push_back(claim_template(out.built));
    cert.notes.push_back(t == 1 ? "bivertex mode: one pendant copy"
                                : "bivertex mode: cycle of copies");
    return b;
}

} // namespace

BuiltInstance build_3reg_case2(const Instance& seed, const GadgetSpec& gadget, int r) {
    return case2_core(seed, gadget, r, "3reg-case2");
}

BuiltInstance build_butterfly_safe(const Instance& seed, const GadgetSpec& gadget, int r) {
    if (r < 5)
        throw InputError("build_butterfly_safe: r must be at least 5 (C4, C5, butterfly)");
    if (has_c4_subgraph(gadget.f_prime) || has_c5_subgraph(gadget.f_prime) ||
        has_butterfly_subgraph(gadget.f_prime))
        throw InputError("build_butterfly_safe: gadget contains C4, C5 or a butterfly");
    auto g0 = girth(seed.graph());
    if (g0 && *g0 < 6)
        throw InputError("build_butterfly_safe: seed girth must be at least 6");

    BuiltInstance b = case2_core(seed, gadget, r, "butterfly-safe");
    b.certificate.claims.push_back(claim_absent("c4"));
    b.certificate.claims.push_back(claim_absent("c5"));
    b.certificate.claims.push_back(claim_absent("butterfly"));
    return b;
}

BuiltInstance build_4reg_instance(const Instance& seed, const GadgetSpec& gadget, int r) {
    require_cc_lists(seed, "build_4reg_instance");
    if (r < 2) throw InputError("build_4reg_instance: r must be at least 2");
    if (gadget.ell != 4)
        throw InputError("build_4reg_instance: gadget lists must be 4-regular");
    int t = gadget.t();
    if (t < 1 || t > 3)
        throw InputError("build_4reg_instance: gadget must have t in {1,2,3}");

    int s = (r % 2 == 0) ? r : r + 1;
    int fresh = fresh_start(seed);

    OutputBuilder out;
    const Graph& g = seed.graph();
    for (int v = 0; v < g.vertex_count(); ++v)
        out.add_vertex(seed.lists().list(v), /*record=*/false);
    for (auto e : g.edges()) out.add_edge(e.first, e.second);

    for (int w = 0; w < g.vertex_count(); ++w) {
        ColourList lw = seed.lists().list(w);
        bool biv = lw.size() == 2;
        auto with = [&](std::initializer_list<int> extra) {
            ColourList l = lw;
            for (int c : extra) l.push_back(c);
            std::sort(l.begin(), l.end());
            return l;
        };
        if (t == 1) {
            if (biv) {
                for (int target : {4, 5}) {
                    auto sigma = gadget_renaming(gadget, {target}, std::nullopt, fresh);
                    auto [cu, cv] = insert_copy(out, gadget, sigma, -1);
                    (void)cv;
                    out.add_edge(w, cu);
                }
                out.set_list(w, with({4, 5}));
            } else {
                auto sigma = gadget_renaming(gadget, {4}, std::nullopt, fresh);
                auto [cu, cv] = insert_copy(out, gadget, sigma, -1);
                (void)cv;
                out.add_edge(w, cu);
                out.set_list(w, with({4}));
            }
        } else if (t == 2) {
            if (biv) {
                auto sigma = gadget_renaming(gadget, lw, with({4, 5}), fresh);
                insert_copy(out, gadget, sigma, w);
                if (out.lists[w] != with({4, 5}))
                    throw InternalError("identified copy list mismatch");
            } else {
                std::vector<int> us;
                for (int i = 0; i < s; ++i) {
                    auto sigma = gadget_renaming(gadget, {4, 5}, std::nullopt, fresh);
                    auto [cu, cv] = insert_copy(out, gadget, sigma, -1);
                    (void)cv;
                    us.push_back(cu);
                }
                out.add_edge(w, us.front());
                for (int i = 0; i + 1 < s; ++i) out.add_edge(us[i], us[i + 1]);
                out.add_edge(us.back(), w);
                out.set_list(w, with({4}));
            }
        } else { // t == 3
            if (biv) {
                for (int target : {4, 5}) {
                    auto sigma = gadget_renaming(gadget, with({target}), with({4, 5}), fresh);
                    insert_copy(out, gadget, sigma, w);
                }
                if (out.lists[w] != with({4, 5}))
                    throw InternalError("identified copy list mismatch");
            } else {
                auto sigma = gadget_renaming(gadget, lw, with({4}), fresh);
                insert_copy(out, gadget, sigma, w);
                if (out.lists[w] != with({4}))
                    throw InternalError("identified copy list mismatch");
            }
        }
    }

    BuiltInstance b{out.finish(), {}};
    auto& cert = b.certificate;
    cert.construction = "4reg";
    cert.params["r"] = r;
    cert.params["s"] = s;
    cert.params["t"] = t;
    cert.seed_digest = instance_digest(seed);
    cert.claims.push_back(claim_regular(4));
    cert.claims.push_back(claim_planar(
        is_planar(seed.graph()) &&
        (seed.vertex_count() == 0 || is_planar(gadget.f_prime))));
    cert.claims.push_back(claim_template(out.built));
    cert.notes.push_back(t == 1 ? "attach mode" : (t == 2 ? "identify/cycle mode" : "identify mode"));
    return b;
}

BuiltInstance build_pendant_precolour(const Graph& seed, int k) {
    if (k < 4) throw InputError("build_pendant_precolour: k must be at least 4");
    if (seed.max_degree() > 4)
        throw InputError("build_pendant_precolour: seed max degree must be <= 4");

    int n = seed.vertex_count();
    std::vector<Edge> edges = seed.edges();
    ColourList palette;
    for (int c = 1; c <= k; ++c) palette.push_back(c);

    std::vector<ColourList> lists(n, palette);
    std::vector<int> pre(n, -1);
    std::vector<std::pair<int, int>> pre_template;
    std::vector<std::pair<int, ColourList>> tmpl;
    for (int v = 0; v < n; ++v) {
        tmpl.push_back({v, palette});
        pre_template.push_back({v, -1});
    }
    int next = n;
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= k - 3; ++i) {
            int x = next++;
            lists.push_back(palette);
            pre.push_back(i + 3);
            edges.push_back({v, x});
            tmpl.push_back({x, palette});
            pre_template.push_back({x, i + 3});
        }

    Instance out(Graph(next, std::move(edges)), ListAssignment(std::move(lists)),
                 Precolouring(std::move(pre), k));
    BuiltInstance b{std::move(out), {}};
    auto& cert = b.certificate;
    cert.construction = "pendant-precolour";
    cert.params["k"] = k;
    cert.seed_digest =
        instance_digest(Instance(seed, ListAssignment::uniform(n, {1, 2, 3})));
    cert.claims.push_back(claim_regular(k));
    cert.claims.push_back(claim_max_degree(k + 1));
    cert.claims.push_back(claim_planar(is_planar(seed)));
    cert.claims.push_back(claim_template(std::move(tmpl)));
    cert.claims.push_back(claim_precolour(std::move(pre_template)));
    return b;
}

BuiltInstance build_pendant_clique(const Graph& seed, int k) {
    if (k < 4) throw InputError("build_pendant_clique: k must be at least 4");
    if (seed.max_degree() > 4)
        throw InputError("build_pendant_clique: seed max degree must be <= 4");

    int n = seed.vertex_count();
    std::vector<Edge> edges = seed.edges();
    ColourList palette;
    for (int c = 1; c <= k; ++c) palette.push_back(c);
    ColourList high; // k+1 .. 2k
    for (int c = k + 1; c <= 2 * k; ++c) high.push_back(c);

    std::vector<ColourList> lists(n, palette);
    std::vector<std::pair<int, ColourList>> tmpl;
    for (int v = 0; v < n; ++v) tmpl.push_back({v, palette});

    int next = n;
    for (int v = 0; v < n; ++v)
        for (int i = 1; i <= k - 3; ++i) {
            int x = next++;
            ColourList lx{i};
            for (int c = k + 1; c <= 2 * k - 1; ++c) lx.push_back(c);
            lists.push_back(lx);
            edges.push_back({v, x});
            tmpl.push_back({x, lx});
            std::vector<int> clique{x};
            for (int j = 0; j < k; ++j) {
                int wj = next++;
                lists.push_back(high);
                tmpl.push_back({wj, high});
                clique.push_back(wj);
            }
            for (std::size_t a = 0; a < clique.size(); ++a)
                for (std::size_t bmore = a + 1; bmore < clique.size(); ++bmore)
                    edges.push_back({clique[a], clique[bmore]});
        }

    Instance out(Graph(next, std::move(edges)), ListAssignment(std::move(lists)));
    BuiltInstance b{std::move(out), {}};
    auto& cert = b.certificate;
    cert.construction = "pendant-clique";
    cert.params["k"] = k;
    cert.seed_digest =
        instance_digest(Instance(seed, ListAssignment::uniform(n, {1, 2, 3})));
    cert.claims.push_back(claim_regular(k));
    cert.claims.push_back(claim_max_degree(k + 1));
    cert.claims.push_back(claim_planar(false)); // the attached cliques contain K5
    cert.claims.push_back(claim_template(std::move(tmpl)));
    return b;
}

BuiltInstance build_3p1_instance(const Instance& seed) {
    if (seed.precolouring())
        throw InputError("build_3p1_instance: seed must not carry a precolouring");
    for (int v = 0; v < seed.vertex_count(); ++v) {
        auto sz = seed.lists().list(v).size();
        if (sz != 2 && sz != 3)
            throw InputError("build_3p1_instance: list sizes must be 2 or 3");
    }
    int n = seed.vertex_count();
    int f1 = fresh_start(seed);
    int f2 = f1 + 1, f3 = f1 + 2;

    OutputBuilder out;
    for (int v = 0; v < n; ++v) out.add_vertex(seed.lists().list(v), false);
    for (auto e : seed.graph().edges()) out.add_edge(e.first, e.second);

    std::vector<Edge> added_edges;
    int s = out.add_vertex({f1, f2, f3});
    int t = out.add_vertex({f1, f2, f3});
    int u = out.add_vertex({f1, f2, f3});
    for (auto [a, b] : std::vector<Edge>{{s, t}, {s, u}, {t, u}}) {
        out.add_edge(a, b);
        added_edges.push_back({a, b});
    }
    for (int v = 0; v < n; ++v)
        for (int apex : {s, t, u}) {
            out.add_edge(v, apex);
            added_edges.push_back({v, apex});
        }
    for (int v = 0; v < n; ++v)
        if (seed.lists().list(v).size() == 2) {
            ColourList l = seed.lists().list(v);
            l.push_back(f1);
            std::sort(l.begin(), l.end());
            out.set_list(v, std::move(l));
        }

    BuiltInstance b{out.finish(), {}};
    auto& cert = b.certificate;
    cert.construction = "3p1";
    cert.params["fresh"] = f1;
    cert.seed_digest = instance_digest(seed);
    cert.claims.push_back(claim_regular(3));
    cert.claims.push_back(claim_edges(std::move(added_edges)));
    cert.claims.push_back(claim_template(out.built));
    return b;
}

// ---- verification ----

bool VerifyReport::all_claims_pass() const {
    for (const auto& [d, ok] : claim_results)
        if (!ok) return false;
    return true;
}

bool VerifyReport::passed() const {
    return digest_ok && equivalence == Equivalence::match && all_claims_pass();
}

namespace {

bool shortest_cycle_through_edges_at_least(const Graph& g, const std::vector<Edge>& joints,
                                           int bound) {
    for (auto [a, b] : joints) {
        if (!g.has_edge(a, b)) return false; // joint edge vanished
        // BFS in g - (a,b).
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        dist[a] = 0;
        q.push(a);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (v == a && w == b) continue;
                if (v == b && w == a) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        if (dist[b] != -1 && 1 + dist[b] < bound) return false;
    }
    return true;
}

bool eval_claim(const Instance& out, const Claim& c) {
    const Graph& g = out.graph();
    switch (c.kind) {
    case Claim::Kind::list_regular:
        return out.lists().is_regular(c.value);
    case Claim::Kind::list_sizes_in: {
        for (int v = 0; v < g.vertex_count(); ++v) {
            int sz = static_cast<int>(out.lists().list(v).size());
            if (std::find(c.values.begin(), c.values.end(), sz) == c.values.end())
                return false;
        }
        return true;
    }
    case Claim::Kind::girth_at_least: {
        auto gg = girth(g);
        return !gg || *gg >= c.value;
    }
    case Claim::Kind::max_degree_at_most:
        return g.max_degree() <= c.value;
    case Claim::Kind::subgraph_absent: {
        if (c.pattern == "c4") return !has_c4_subgraph(g);
        if (c.pattern == "c5") return !has_c5_subgraph(g);
        if (c.pattern == "butterfly") return !has_butterfly_subgraph(g);
        if (c.pattern == "triangle") return !has_triangle(g);
        if (c.pattern.rfind("k1r:", 0) == 0)
            return !has_star_subgraph(g, std::stoi(c.pattern.substr(4)));
        return false;
    }
    case Claim::Kind::planar:
        return is_planar(g) == c.flag;
    case Claim::Kind::lists_template: {
        for (const auto& [v, l] : c.expected_lists) {
            if (v < 0 || v >= g.vertex_count()) return false;
            if (out.lists().list(v) != l) return false;
        }
        return true;
    }
    case Claim::Kind::precolour_template: {
        if (!out.precolouring()) return c.expected_colours.empty();
        for (const auto& [v, col] : c.expected_colours) {
            if (v < 0 || v >= g.vertex_count()) return false;
            int actual = out.precolouring()->raw()[v];
            if (actual != col) return false;
        }
        return true;
    }
    case Claim::Kind::edges_present: {
        for (auto [a, b] : c.edges)
            if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() ||
                !g.has_edge(a, b))
                return false;
        return true;
    }
    case Claim::Kind::non_gadget_girth:
        return shortest_cycle_through_edges_at_least(g, c.edges, c.value);
    }
    return false;
}

} // namespace

VerifyReport verify_reduction(const Instance& seed, const Instance& out,
                              const ReductionCertificate& cert,
                              std::uint64_t oracle_node_budget) {
    VerifyReport rep;
    rep.digest_ok = instance_digest(seed) == cert.seed_digest;

    try {
        ExactSolver oracle(oracle_node_budget);
        rep.seed_feasible = oracle.feasible(seed);
        rep.out_feasible = oracle.feasible(out);
        rep.equivalence = rep.seed_feasible == rep.out_feasible
                              ? VerifyReport::Equivalence::match
                              : VerifyReport::Equivalence::mismatch;
    } catch (const BudgetExceeded&) {
        rep.equivalence = VerifyReport::Equivalence::unverified;
    } catch (const InputError&) {
        // Instance too large for the oracle: explicitly unverified.
        rep.equivalence = VerifyReport::Equivalence::unverified;
    }

    for (const auto& claim : cert.claims)
        rep.claim_results.push_back({claim.describe(), eval_claim(out, claim)});
    return rep;
}

} // namespace listcol
