#pragma once

#include <string>
#include <string_view>

namespace proflik {

// Shortest decimal string that parses back to exactly the same double.
// All CSV output goes through this so repeated runs are byte-identical.
std::string format_double(double value);

// Strict full-string parse; throws ParseError on trailing junk or overflow.
double parse_double(std::string_view text);

long long parse_integer(std::string_view text);

}  // namespace proflik
