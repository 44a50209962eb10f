#pragma once

#include <stdexcept>
#include <string>

namespace m2d {

// All contract violations are reported with a leading condition tag,
// e.g. "BadShape: ..." or "SizeError: ...".
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& what) { throw error(what); }

}  // namespace m2d
