#pragma once

#include <stdexcept>
#include <string>

namespace bowtie {

// Base for every error raised by the library. Callers that only care about
// "something was wrong with the input" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// d_n > n - 1: there are not enough other vertices to lay off the last term.
class LayoffImpossible : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NotGraphic : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ZeroDegreeVertex : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

class NotPotentially : public Error {
public:
    using Error::Error;
};

class TraceMismatch : public Error {
public:
    using Error::Error;
};

// Raised when an accepted sequence cannot be realized with a bowtie by any
// construction route. This would contradict the characterization, so it is
// never caught inside the library.
class InternalExhaustion : public Error {
public:
    using Error::Error;
};

} // namespace bowtie
