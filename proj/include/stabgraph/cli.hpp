#ifndef STABGRAPH_CLI_HPP
#define STABGRAPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stabgraph {

// Runs one CLI invocation (args exclude the program name). Exit status 0 on
// success, 1 on domain errors (bad files, out-of-range parameters), 2 on
// usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stabgraph

#endif
