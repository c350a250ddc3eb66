#pragma once

#include <stdexcept>
#include <string>

namespace tdcut {

// Malformed input text (graph/forest files); the message names the offending line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input that violates a documented precondition:
// disconnected graph, budget out of range, forest/graph mismatch, size refusals.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant broke. Signals a bug in this library, not a user error.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tdcut
