#ifndef LISTCOL_CLI_HPP
#define LISTCOL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace listcol {

// Exit codes: 0 completed with a verdict (infeasible/not-choosable are
// verdicts, not failures); 64 usage; 65 malformed input file; 66 unreadable
// file; 3 violated precondition; 4 budget exhausted; 70 internal error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace listcol

#endif
