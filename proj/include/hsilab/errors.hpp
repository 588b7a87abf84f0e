#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hsilab {

// Malformed textual input (graph6, edge lists, pattern words).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A computation was requested beyond the configured vertex/variable bound.
class ScaleGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The linear-quotients decider could not reach a verdict within its bounds.
class UndecidedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hsilab
