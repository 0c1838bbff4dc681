#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyfree {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing elements of different coefficient fields (e.g. Q(\sqrt 2) and Q(\sqrt 5)).
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

/// Division by a zero element or zero polynomial.
class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Input exceeds a hard cap of an exponential-time routine.
class DegreeCapError : public Error {
public:
    explicit DegreeCapError(const std::string& what) : Error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Malformed textual or file input. `offset` is a byte offset into the input
/// where the problem was detected (npos when not applicable).
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    ParseError(const std::string& what, std::size_t offset = npos)
        : Error(offset == npos ? what : what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace polyfree
