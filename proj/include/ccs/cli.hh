#ifndef CCS_CLI_HH
#define CCS_CLI_HH 1

#include <ostream>
#include <string>
#include <vector>

namespace ccs
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_negative = 1, // verification failed or no system exists
        exit_usage = 2,
        exit_resource = 3
    };

    // args[0] is the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
