#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bkplan {

// Base class for all errors raised by the library. CLI maps subclasses
// to exit codes (usage=1, validation=2, resource limit=3).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string &msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

class UnsupportedRequirementError : public Error {
public:
    explicit UnsupportedRequirementError(const std::string &keyword)
        : Error("unsupported requirement: " + keyword), keyword(keyword) {}
    std::string keyword;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class NotStratifiableError : public Error {
public:
    NotStratifiableError(const std::string &msg, std::vector<std::string> cycle)
        : Error(msg), cycle(std::move(cycle)) {}
    // Predicate names along one negative-edge dependency cycle.
    std::vector<std::string> cycle;
};

class ResourceLimitError : public Error {
public:
    using Error::Error;
};

class InapplicableActionError : public Error {
public:
    using Error::Error;
};

class EmptyPolicyError : public Error {
public:
    using Error::Error;
};

class StepCapExceededError : public Error {
public:
    using Error::Error;
};

} // namespace bkplan
