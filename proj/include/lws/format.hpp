#pragma once

#include <charconv>
#include <string>

namespace lws {

/// Shortest round-trip decimal form of a double (std::to_chars default).
/// Byte-deterministic for identical inputs.
inline std::string format_double(double x) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, r.ptr);
}

} // namespace lws
