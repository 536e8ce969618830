#pragma once

#include <stdexcept>
#include <string>

namespace epc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (shape, domain, kind).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An iterative numeric routine hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace epc
