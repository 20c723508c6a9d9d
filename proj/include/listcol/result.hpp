#ifndef LISTCOL_RESULT_HPP
#define LISTCOL_RESULT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "listcol/instance.hpp"

namespace listcol {

struct SolveStats {
    std::uint64_t search_nodes = 0;
    std::uint64_t peel_steps = 0;
    bool fallback_used = false; // degree-list route resorted to backtracking
};

// Outcome of a solver run. Colouring results always pass check_colouring;
// infeasible results are only emitted by complete methods.
struct SolveResult {
    bool feasible = false;
    std::optional<Colouring> colouring;
    std::string method;
    SolveStats stats;

    static SolveResult found(Colouring c, std::string method, SolveStats stats = {}) {
        SolveResult r;
        r.feasible = true;
        r.colouring = std::move(c);
        r.method = std::move(method);
        r.stats = stats;
        return r;
    }
    static SolveResult none(std::string method, SolveStats stats = {}) {
        SolveResult r;
        r.feasible = false;
        r.method = std::move(method);
        r.stats = stats;
        return r;
    }
};

} // namespace listcol

#endif
