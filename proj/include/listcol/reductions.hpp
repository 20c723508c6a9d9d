#ifndef LISTCOL_REDUCTIONS_HPP
#define LISTCOL_REDUCTIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "listcol/instance.hpp"

namespace listcol {

// A graph F with an ell-regular list assignment admitting no respecting
// colouring. Oracle-verified at construction.
struct CounterexamplePair {
    Graph graph;
    ListAssignment lists;
    int ell = 0;

    static CounterexamplePair verified(Graph f, ListAssignment lists);
};

// F' = F - uv together with the forced-colour data: every respecting
// colouring of F' gives u and v the same colour, and `forced` is exactly the
// set of colours achievable on u. Oracle-verified at construction.
struct GadgetSpec {
    Graph f_prime;
    ListAssignment lists;
    int u = 0;
    int v = 0;
    ColourList forced; // T
    int ell = 0;

    int t() const { return static_cast<int>(forced.size()); }

    // Direct route for synthetic gadgets: verifies the forcing properties by
    // exhaustive oracle enumeration.
    static GadgetSpec verified(Graph f_prime, ListAssignment lists, int u, int v);
};

// Removes vertices and edges (lowest index / lexicographic first) while the
// pair stays non-colourable; the result is removal-minimal and connected.
CounterexamplePair minimize_counterexample(CounterexamplePair pair);

// Builds the gadget for a removal-minimal pair and an edge e of F.
GadgetSpec make_gadget(const CounterexamplePair& pair, Edge e);

// Canned synthetic gadgets exercising every builder at desk scale. Each is
// produced through the full verified pipeline (counterexample -> minimal ->
// gadget) and is deterministic.
CounterexamplePair k4_counterexample(); // K4, uniform {1,2,3}
GadgetSpec synthetic_gadget_3reg(int t); // t in {1,2}; 3-regular lists
GadgetSpec synthetic_gadget_4reg(int t); // t in {1,2,3}; 4-regular lists
GadgetSpec synthetic_gadget_toy();       // C3/{4,5}: 2-regular, acyclic F'

// ---- certificates ----

struct Claim {
    enum class Kind {
        list_regular,          // value = ell
        list_sizes_in,         // values = allowed sizes
        girth_at_least,        // value = p
        max_degree_at_most,    // value = bound
        subgraph_absent,       // pattern name
        planar,                // flag = expected planarity
        lists_template,        // expected_lists: exact lists of built vertices
        precolour_template,    // expected_colours: vertex -> colour (-1 = none)
        edges_present,         // edges that the construction added
        non_gadget_girth       // value = bound, edges = joint edges
    };
    Kind kind;
    int value = 0;
    std::vector<int> values;
    std::string pattern;
    bool flag = false;
    std::vector<std::pair<int, ColourList>> expected_lists;
    std::vector<std::pair<int, int>> expected_colours;
    std::vector<Edge> edges;

    std::string describe() const;
};

struct ReductionCertificate {
    std::string construction;
    std::map<std::string, long long> params;
    std::vector<std::string> notes;
    std::vector<Claim> claims;
    std::uint64_t seed_digest = 0;
};

struct BuiltInstance {
    Instance instance;
    ReductionCertificate certificate;
};

// Structure-insensitive digest of an instance (graph + lists + precolouring).
std::uint64_t instance_digest(const Instance& inst);

// ---- builders ----

// Replaces every edge by an odd path whose interior carries the 2-list of
// one endpoint; output girth >= p. Lists must come from {1,2},{1,3},{2,3},
// {1,2,3} and every edge needs an endpoint with a 2-list.
BuiltInstance build_girth_lift(const Instance& seed, int p);

// Uniform-list gadget chains: each seed edge becomes s = ceil(r/6) chained
// copies of F' plus one closing edge; all lists {1,2,3}. The output is
// list-colourable iff the seed graph is 3-colourable.
BuiltInstance build_3reg_case1(const Graph& seed, const GadgetSpec& gadget, int r);

// Non-uniform gadgets: every 2-list vertex gets one pendant copy (t = 1) or
// a cycle of s copies (t = 2, s = r rounded up to even) and colour 4 added
// to its list. Seed lists as in build_girth_lift.
BuiltInstance build_3reg_case2(const Instance& seed, const GadgetSpec& gadget, int r);

// The degree-4 analogue with all six sub-constructions
// (t in {1,2,3} x bivertex/trivertex); gadget lists must be 4-regular.
BuiltInstance build_4reg_instance(const Instance& seed, const GadgetSpec& gadget, int r);

// build_3reg_case2 with r >= 5 plus forbidden-subgraph side conditions: the
// gadget must be C4/C5/butterfly-subgraph-free and the seed must have girth
// at least 6; the certificate claims the output stays C4/C5/butterfly-free.
BuiltInstance build_butterfly_safe(const Instance& seed, const GadgetSpec& gadget, int r);

// Adds k-3 precoloured pendants to every vertex: a k-extension exists iff
// the seed is 3-colourable. Output instance carries uniform {1..k} lists and
// the pendant precolouring. Requires k >= 4 and max degree <= 4.
BuiltInstance build_pendant_precolour(const Graph& seed, int k);

// The list variant: pendants with lists {i, k+1..2k-1} pinned by attached
// (k+1)-cliques listed {k+1..2k}; k-regular output lists.
BuiltInstance build_pendant_clique(const Graph& seed, int k);

// Adds a triangle of three fresh-coloured vertices adjacent to everything
// and the first fresh colour to every 2-list; 3-regular output.
BuiltInstance build_3p1_instance(const Instance& seed);

// ---- verification ----

struct VerifyReport {
    enum class Equivalence { match, mismatch, unverified };
    Equivalence equivalence = Equivalence::unverified;
    bool seed_feasible = false;
    bool out_feasible = false;
    bool digest_ok = false;
    std::vector<std::pair<std::string, bool>> claim_results;

    bool all_claims_pass() const;
    bool passed() const; // digest + equivalence match + all claims
};

// Oracle answer-equivalence plus an audit of every certificate claim.
// Budget overruns yield Equivalence::unverified, never a false pass.
VerifyReport verify_reduction(const Instance& seed, const Instance& out,
                              const ReductionCertificate& cert,
                              std::uint64_t oracle_node_budget = 50'000'000);

} // namespace listcol

#endif
