#ifndef LISTCOL_IO_HPP
#define LISTCOL_IO_HPP

#include <string>
#include <vector>

#include "listcol/instance.hpp"
#include "listcol/reductions.hpp"

namespace listcol {

// Plain-text instance document:
//   # comment
//   n <count> m <count> k <palette-or-0>
//   e <u> <v>
//   l <v> : <c1> <c2> ...
//   p <v> = <c>
// Lines may appear in any order after the header. With k > 0, vertices
// without an `l` line default to {1..k}; precolour lines require k > 0.
// Duplicate `l`/`p` lines for a vertex are rejected.
Instance parse_instance(const std::string& text);
std::string write_instance(const Instance& inst); // canonical (sorted) form

// Certificate report:
//   certificate <construction>
//   param <name> <value>
//   digest <hex>
//   note <text>
//   claim <kind> <args...>
std::string write_certificate(const ReductionCertificate& cert);
ReductionCertificate parse_certificate(const std::string& text);

// Line-oriented run report; `extras` keeps insertion order.
struct RunReport {
    std::string command;
    std::string verdict;
    std::vector<std::pair<std::string, std::string>> extras;
    std::vector<int> colouring; // empty when no colouring applies

    std::string to_text() const;
    std::string to_json() const;
};

} // namespace listcol

#endif
