#pragma once

#include <iosfwd>

#include "mvpoly/checks.hpp"
#include "mvpoly/json_io.hpp"

namespace mvpoly::cli {

// Full command-line surface; returns the process exit code.
// 0 pass, 1 violations found, 2 usage/schema error, 3 invalid mathematical
// input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Exposed for tests: the polygon command's payload for a rank-2 polytope.
json polygon_json(const MVContext& ctx, const MVPolytope& P);

} // namespace mvpoly::cli
