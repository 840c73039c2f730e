#include "proflik/numfmt.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "proflik/errors.hpp"

namespace proflik {

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw ParseError("failed to format double");
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  double out = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw ParseError("invalid number '" + std::string(text) + "'");
  return out;
}

long long parse_integer(std::string_view text) {
  long long out = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last)
    throw ParseError("invalid integer '" + std::string(text) + "'");
  return out;
}

}  // namespace proflik
