#pragma once

#include <stdexcept>
#include <string>

namespace hookspecht {

/// Internal invariant check, active in every build type. A failure indicates
/// a transcription bug in the action tables or relation data, not bad input.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

} // namespace hookspecht
