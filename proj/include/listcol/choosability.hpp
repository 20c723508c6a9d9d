#ifndef LISTCOL_CHOOSABILITY_HPP
#define LISTCOL_CHOOSABILITY_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "listcol/graph.hpp"
#include "listcol/instance.hpp"

namespace listcol {

struct ChoosabilityResult {
    enum class Verdict { choosable, not_choosable, budget_exceeded };
    Verdict verdict = Verdict::budget_exceeded;
    std::optional<ListAssignment> witness; // an infeasible ell-regular assignment
    std::uint64_t assignments_tested = 0;
    int ell = 0;

    bool decided() const { return verdict != Verdict::budget_exceeded; }
    bool choosable() const { return verdict == Verdict::choosable; }
};

// Streams every ell-regular list assignment up to colour renaming, exactly
// once per renaming orbit. An assignment is identified with the multiset of
// its colour-occurrence vertex sets, enumerated as a non-increasing mask
// sequence; emitted colours are 1..k in enumeration order. The first emitted
// assignment is always the uniform one. Stops early when cb returns false.
void enumerate_canonical_assignments(const Graph& g, int ell,
                                     const std::function<bool(const ListAssignment&)>& cb);

// Counts the canonical assignments (mainly for cross-checks in tests).
std::uint64_t count_canonical_assignments(int n, int ell);

// Decides ell-choosability by checking every canonical assignment with the
// exact solver; the first infeasible assignment becomes the witness.
// budget = 0 means unlimited; otherwise the verdict degrades to
// budget_exceeded after that many assignments (never a wrong verdict).
ChoosabilityResult is_choosable(const Graph& g, int ell, std::uint64_t budget = 0);

// Repeatedly deletes a vertex of degree < ell (lowest index first); such a
// vertex can always be coloured last under any ell-regular assignment, so
// the verdict is preserved. The result has min degree >= ell or is empty.
Graph choosability_peel(const Graph& g, int ell);

} // namespace listcol

#endif
