#include "wsnacc/format.hpp"

#include <cstdio>

namespace wsnacc {

std::string fixed(double value, int decimals) {
    if (value == 0.0) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    // Values that round to zero from below would otherwise print as "-0.000000".
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

}  // namespace wsnacc
