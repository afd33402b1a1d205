#pragma once

#include <stdexcept>
#include <string>

namespace pqmet {

/// Malformed input document (finite-space or mapping JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A dependent check was invoked on inputs that fail its prerequisite check.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pqmet
