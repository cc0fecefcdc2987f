#pragma once

#include <string>
#include <string_view>

namespace salt {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);
/// Parses the whole of text as a double; throws ParameterError otherwise.
double parse_double(std::string_view text);

}  // namespace salt
