#pragma once

#include <ostream>

namespace qp::cli {

// Runs the command line tool. Returns 0 on success, 1 on usage errors and
// 2 when a precondition or invariant is violated.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qp::cli
