#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asg::cli {

/// Stable exit codes.
enum exit_code : int {
    ok = 0,
    negative = 1,  // non-member, oracle disagreement
    invalid_input = 2,
    overflow = 3,
};

struct Environment {
    bool color = false;  // highlight generators in tables
};

/// Runs one invocation; args excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err, Environment env = {});

}  // namespace asg::cli
