#pragma once

#include <string>
#include <string_view>

namespace rdc {

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

// Strict full-string parse. Accepts "inf"/"-inf"/"nan" like std::to_chars
// emits them. Throws Error(parse) on anything else.
double parse_double(std::string_view text, std::string_view what);
long long parse_int(std::string_view text, std::string_view what);

}  // namespace rdc
