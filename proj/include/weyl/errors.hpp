#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

/// Base of every library error. `kind()` names the module-level condition.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Mathematical precondition failed (non-finite groupoid, bad word, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An exact cross-check disagreed.
class VerificationError : public Error {
public:
    using Error::Error;
};

/// Malformed input document or unreadable file.
class InputError : public Error {
public:
    using Error::Error;
};

/// Arithmetic left the range of the integer type.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& message) : Error("Overflow", message) {}
};

} // namespace weyl
