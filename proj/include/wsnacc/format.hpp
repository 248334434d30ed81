#pragma once

#include <string>

namespace wsnacc {

/// Fixed-point with `decimals` digits, "C" locale; negative zero prints as 0.
std::string fixed(double value, int decimals = 6);

}  // namespace wsnacc
