#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disruptix {

// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed input record; carries the 1-based line number of the offender.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

// Input produced no valid records at all.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

// Mutation attempted after freeze().
class GraphFrozenError : public Error {
public:
    using Error::Error;
};

// Query that needs a frozen graph called during the build phase.
class GraphNotFrozenError : public Error {
public:
    using Error::Error;
};

// Same id added twice with different year or references.
class DuplicatePaperError : public Error {
public:
    using Error::Error;
};

// Record violates a structural invariant (empty id, year out of range, ...).
class InvalidPaperError : public Error {
public:
    using Error::Error;
};

class UnknownFocalError : public Error {
public:
    using Error::Error;
};

// Focal paper has no publication year, so the prelude window is undecidable.
class FocalYearUnknownError : public Error {
public:
    using Error::Error;
};

// Operation does not apply to the requested indicator.
class NotApplicableError : public Error {
public:
    using Error::Error;
};

}  // namespace disruptix
