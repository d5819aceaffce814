#pragma once

#include <stdexcept>
#include <string>

namespace gswsp {

// Root of every error thrown by the library. Commands map the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class IntervalError : public Error {
public:
    using Error::Error;
};

class ParityError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class LeakError : public Error {
public:
    using Error::Error;
};

}  // namespace gswsp
