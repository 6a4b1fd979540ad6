#pragma once

#include <stdexcept>
#include <string>

namespace pfaff {

/// Invalid argument or precondition violation (bad parameter, mismatched
/// dimensions, malformed value).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration or search budget exceeded. Callers may retry with a larger cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

} // namespace pfaff
