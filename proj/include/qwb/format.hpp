#pragma once

#include <string>

namespace qwb {

// 17 significant digits ("%.17g"); parses back to the same double.
std::string format_double(double value);

}  // namespace qwb
