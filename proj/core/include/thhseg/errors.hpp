#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thhseg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generator name or id that the active table does not know.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold (e.g. d∘d ≠ 0).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A request reaches past a configured degree cutoff.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed the configured memory budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class UnsupportedCase : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace thhseg
