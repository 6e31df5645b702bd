#pragma once

// Command dispatch for the braidcount executable, kept in a library so tests
// can drive it with captured streams.

#include <ostream>
#include <string>
#include <vector>

namespace braidcount::cli {

// args excludes the program name. Exit codes: 0 ok, 1 failed verification,
// 2 bad input or parameters.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidcount::cli
