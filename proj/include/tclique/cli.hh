#ifndef TCLIQUE_CLI_HH
#define TCLIQUE_CLI_HH

#include <iosfwd>
#include <string>
#include <vector>

namespace tclique
{
    inline constexpr int exit_ok = 0;
    /// Property violation, or a negative answer (pattern not found, no mountain).
    inline constexpr int exit_negative = 1;
    inline constexpr int exit_usage = 2;
    inline constexpr int exit_budget = 3;

    /// Runs one command line (args[0] is the program name). A file argument of "-" reads standard input.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
