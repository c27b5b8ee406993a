#ifndef RYSER_ERRORS_HPP
#define RYSER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ryser {

// Malformed input text (bad token, bad header, bad rational literal, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input outside an operation's domain (empty edge list,
// negative weight, unsupported field order, ...).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

// The requested computation exceeds a configured size or time budget.
// Distinct from a negative mathematical answer.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ryser

#endif
