#pragma once

#include <cstdio>
#include <string>

namespace exciton {

/// Scientific notation, 9 significant digits. The fixed width keeps CLI and
/// CSV output byte-deterministic.
inline std::string sci9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

/// Shortest form that parses back to the identical double.
inline std::string roundtrip(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace exciton
