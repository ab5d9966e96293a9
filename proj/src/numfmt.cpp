#include "numfmt.hpp"

#include <charconv>

#include "error.hpp"

namespace rdc {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    fail(ErrorKind::parse,
         "invalid number for " + std::string(what) + ": \"" + std::string(text) + "\"");
  }
  return value;
}

long long parse_int(std::string_view text, std::string_view what) {
  long long value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    fail(ErrorKind::parse,
         "invalid integer for " + std::string(what) + ": \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace rdc
