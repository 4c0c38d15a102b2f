#pragma once

#include "horo/geometry.hpp"
#include "horo/transform.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace horo::cli {

enum Exit { kOk = 0, kDomain = 1, kVerifyFailed = 2, kParse = 3 };

/// "x0", "z0", "z0bar" with an optional real prefix ("2z0", "-1.5z0bar"),
/// "tube:s" for (cosh s, i sinh s, 0), or three complex numbers "a,b,c"
/// written like 1, -2.5, 3i, 1-0.5i. ParseError on anything else.
CVec3 parse_point(const std::string& text);

/// "t_max,n_t,n_theta" into q. ParseError on malformed text.
void parse_quad(const std::string& text, QuadratureSpec& q);
/// "t_max,n" into q.
void parse_fiber(const std::string& text, QuadratureSpec& q);

/// Whole command line; returns the process exit code. argv[0] is ignored.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horo::cli
