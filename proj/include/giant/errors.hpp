#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace giant {

// Raised when an operation is applied outside its domain: predecessor of
// zero, subtraction underflow, division by zero, destructor misuse, ...
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed text in one of the textual formats (tree, bij, dec).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace giant
