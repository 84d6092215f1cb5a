#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace duality {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CycleError : public Error {
public:
    using Error::Error;
};

class DuplicateElement : public Error {
public:
    using Error::Error;
};

class UnknownElement : public Error {
public:
    using Error::Error;
};

class NotALattice : public Error {
public:
    using Error::Error;
};

class NotHeyting : public Error {
public:
    NotHeyting(std::size_t b, std::size_t c, const std::string& what) : Error(what), b(b), c(c) {}
    std::size_t b;
    std::size_t c;
};

class NoDecomposition : public Error {
public:
    NoDecomposition(std::size_t element, const std::string& what) : Error(what), element(element) {}
    std::size_t element;
};

class SizeLimit : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Input could not be parsed; the message carries line context where available.
class ParseError : public Error {
public:
    using Error::Error;
};

class MissingRightDual : public Error {
public:
    MissingRightDual(std::size_t component, const std::string& what) : Error(what), component(component) {}
    std::size_t component;
};

class MalformedAntichain : public Error {
public:
    MalformedAntichain(std::size_t a, std::size_t b, const std::string& what) : Error(what), a(a), b(b) {}
    std::size_t a;
    std::size_t b;
};

// A precondition the caller promised does not hold (e.g. a duality that is not one).
class Inconsistent : public Error {
public:
    using Error::Error;
};

class MeetMismatch : public Error {
public:
    MeetMismatch(std::size_t expected, std::size_t actual, const std::string& what)
        : Error(what), expected(expected), actual(actual) {}
    std::size_t expected;
    std::size_t actual;
};

class NoWitness : public Error {
public:
    using Error::Error;
};

} // namespace duality
