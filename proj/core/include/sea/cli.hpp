#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sea::cli {

/// Entry point shared by the binary and the tests.
/// Exit codes: 0 all verdicts pass, 1 semantic failure (axiom violation,
/// unexpected counterexample, --expect mismatch), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sea::cli
