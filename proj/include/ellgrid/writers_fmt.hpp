#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "ellgrid/errors.hpp"

namespace ellgrid::fmt {

/// Shortest decimal string that round-trips the double exactly. Locale- and
/// platform-independent, so emitted files are byte-stable.
inline std::string shortest(double value) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw Error("failed to format floating-point value");
    }
    return {buf, ptr};
}

} // namespace ellgrid::fmt
