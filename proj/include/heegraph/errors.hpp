#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heegraph {

/// A RibbonGraph (or other input object) violates one of its invariants.
class InvalidGraph : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A state-sum or brute-force enumeration would exceed its configured size.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input.  line() is 1-based; 0 means "not line oriented".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A checked mathematical statement failed on concrete data.  Never caught
/// inside the library: it is reported to the caller as-is.
class CheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace heegraph
