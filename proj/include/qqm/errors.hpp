// Error hierarchy shared by the whole library.
//
// Everything user-facing derives from qqm::error.  The CLI maps
// domain_error (and subclasses) to exit code 1 and argument/usage
// problems to exit code 2.

#pragma once

#include <stdexcept>
#include <string>

namespace qqm {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse: mixing dimensions, mixing char-2 and char-0 series, ...
class dimension_mismatch : public error {
public:
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// Mathematically invalid input: zero where nonzero required, non-unit where
// a strict unit is required, T-family violations, out-of-scope predicates.
class domain_error : public error {
public:
    explicit domain_error(const std::string& what) : error(what) {}
};

// The requested answer is not determined by the known terms of a truncated
// series (e.g. valuation of a series that truncates to nothing).
class precision_error : public error {
public:
    explicit precision_error(const std::string& what) : error(what) {}
};

// Text input rejected by the expression parser; carries a position.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qqm
