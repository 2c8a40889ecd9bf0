#pragma once

#include <stdexcept>
#include <string>

namespace nilbu {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Seifert data violating the normalized-form invariants.
class InvalidInvariant : public Error {
public:
    using Error::Error;
};

class NotNilError : public Error {
public:
    using Error::Error;
};

/// Raised by classify when e(M) < 0; reverse_orientation fixes it.
class OrientationError : public Error {
public:
    using Error::Error;
};

class NotAHomomorphism : public Error {
public:
    using Error::Error;
};

class NotSurjective : public Error {
public:
    using Error::Error;
};

class MoveNotApplicable : public Error {
public:
    using Error::Error;
};

class InvalidCharacter : public Error {
public:
    using Error::Error;
};

} // namespace nilbu
