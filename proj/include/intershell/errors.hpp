#ifndef INTERSHELL_ERRORS_HPP
#define INTERSHELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace intershell {

// Bad configuration value (named key where possible).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file. `line` is 1-based, 0 when not tied to a line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line_no = 0)
        : std::runtime_error(line_no > 0 ? what + " (line " + std::to_string(line_no) + ")" : what),
          line(line_no) {}
    int line;
};

// A time slot with no usable ground station: routing cannot proceed.
struct UnroutableError : std::runtime_error {
    UnroutableError(const std::string& what, int slot_no = -1)
        : std::runtime_error(slot_no >= 0 ? what + " (slot " + std::to_string(slot_no) + ")" : what),
          slot(slot_no) {}
    int slot;
};

// Exhaustive enumeration would exceed the configured cap.
struct OracleTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace intershell

#endif
