#pragma once

#include <stdexcept>
#include <string>

namespace massey {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An operation would leave the trusted degree range of an algebra.
class CapOverflow : public Error {
public:
    CapOverflow(const std::string& what, int required_cap)
        : Error(what), required_cap_(required_cap) {}
    int required_cap() const { return required_cap_; }

private:
    int required_cap_;
};

/// A presentation, morphism or class failed a structural check.
class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A Massey product was requested but one of the cup products is nonzero.
class NotDefined : public Error {
public:
    using Error::Error;
};

/// The hypothesis of a transfer statement does not hold on the given input.
class PremiseViolated : public Error {
public:
    using Error::Error;
};

class InvalidDatum : public Error {
public:
    using Error::Error;
};

}  // namespace massey
