#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace skewsign {

inline constexpr std::string_view kVersion = "0.1.0";

// Batch command-line front end. Returns 0 when the query succeeded or every
// check passed, 1 when an identity check failed (the counterexample is in the
// output), and 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewsign
