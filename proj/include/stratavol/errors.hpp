#pragma once

#include <stdexcept>
#include <string>

namespace stratavol {

// Bad user input or an operation outside its mathematical domain. CLI exit 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Incompatible caps or otherwise inconsistent configuration. CLI exit 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant failed (e.g. sign law violated). CLI exit 2.
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace stratavol
