#ifndef FULAT_ERRORS_HPP
#define FULAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fulat {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition of an operation was violated (bad argument, wrong kind of
// input, operation not licensed for this object).  Maps to CLI exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

// An operation would exceed a configured resource bound (enumeration budget,
// exact-arithmetic width).  A kind of domain error.
class CapacityError : public DomainError {
public:
    using DomainError::DomainError;
};

// Malformed input text.  Maps to CLI exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace fulat

#endif
