#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A divisor or reduction needed a valuation that the precision window
// does not determine.
class UnknownValuation : public Error {
public:
    using Error::Error;
};

class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

class DenominatorVanishes : public Error {
public:
    using Error::Error;
};

class LengthBound : public Error {
public:
    using Error::Error;
};

class NotResiduallySeparable : public Error {
public:
    using Error::Error;
};

class NotPerfectResidue : public Error {
public:
    using Error::Error;
};

class NonIntegralDimension : public Error {
public:
    using Error::Error;
};

class NoStabilization : public Error {
public:
    using Error::Error;
};

class UnsupportedKind : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace artin
