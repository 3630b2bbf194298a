#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccc {

/// Malformed code file, design file or catalog index. Carries the 1-based
/// line number when the input is line oriented (0 otherwise).
class format_error : public std::runtime_error {
public:
    format_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    /// Prefixes `context` (typically a file name) and keeps the line number.
    format_error(const std::string& context, const format_error& inner)
        : std::runtime_error(context + ": " + inner.what()), line_(inner.line()) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A design that fails its structural identities (pair coverage, census).
class design_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A construction whose inputs cannot produce a valid code.
class construction_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ccc
