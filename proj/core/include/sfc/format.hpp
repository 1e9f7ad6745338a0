#pragma once

#include <string>

namespace sfc {

/// Shortest decimal text that reads back to exactly the same double.
std::string format_double(double x);

}  // namespace sfc
