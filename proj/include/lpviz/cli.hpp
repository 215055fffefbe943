#pragma once

#include <ostream>

namespace lpviz {

/// Command-line entry point. Returns 0 on success, 1 for user errors and 2
/// for internal failures.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpviz
