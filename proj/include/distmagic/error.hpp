#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace distmagic {

// Raised for any caller-supplied value that violates an operation's
// precondition, including malformed text input. Parsers attach the 1-based
// line number of the offending line.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what)
        : std::invalid_argument(what) {}

    InputError(std::size_t line, const std::string& what)
        : std::invalid_argument("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

}  // namespace distmagic
