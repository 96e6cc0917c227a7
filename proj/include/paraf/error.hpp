#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paraf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument set was used with a framework it is not bound to.
class BindingError : public Error {
public:
    using Error::Error;
};

/// An instance exceeds an enumeration cap or a representation limit.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Malformed user input (frameworks, queries, profiles).
class InputError : public Error {
public:
    using Error::Error;
};

/// Text input that failed to parse; carries the 1-based line number.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was handed a value outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A semantics was routed to a module that does not compute it.
class DispatchError : public Error {
public:
    using Error::Error;
};

} // namespace paraf
