// errors.hpp — exception types shared across the toolkit.

#pragma once

#include <stdexcept>
#include <string>

namespace motifdiff {

// Bad user input: config files, CLI arguments, out-of-range parameters.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed data files. Carries a 1-based line number when one applies.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line_no = 0)
        : std::runtime_error(line_no ? "line " + std::to_string(line_no) + ": " + what
                                     : what),
          line(line_no) {}
    std::size_t line;
};

} // namespace motifdiff
