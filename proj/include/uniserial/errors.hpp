#pragma once

#include <stdexcept>
#include <string>

namespace uniserial {

// Malformed arguments or data: wrong dimensions, broken invariants, bad syntax.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input outside the modeled domain, e.g. a non-nilpotent matrix
// where a nilpotent one is required, or a spectrum that does not split over Q.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data that satisfies all stated preconditions yet contradicts a structural
// theorem this library relies on. Never raised on values produced by the
// library itself; surfaced loudly instead of being silently patched.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace uniserial
