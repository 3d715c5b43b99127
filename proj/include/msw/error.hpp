#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msw {

/// Base class for every error raised by the workbench.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidField : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class NotABasis : public Error {
public:
    using Error::Error;
};

class BadSplit : public Error {
public:
    using Error::Error;
};

class NotMember : public Error {
public:
    using Error::Error;
};

class NotInvariant : public Error {
public:
    using Error::Error;
};

/// Raised when an exhaustive enumeration would exceed its cap. Callers must
/// switch to explicit sampling; nothing is ever sampled silently.
class EnumerationTooLarge : public Error {
public:
    EnumerationTooLarge(std::uint64_t requested, std::uint64_t cap)
        : Error("enumeration of " + std::to_string(requested) + " items exceeds cap " +
                std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    std::uint64_t requested() const noexcept { return requested_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t requested_;
    std::uint64_t cap_;
};

class ScanTooLarge : public Error {
public:
    using Error::Error;
};

} // namespace msw
