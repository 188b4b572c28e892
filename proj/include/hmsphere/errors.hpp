#pragma once

#include <stdexcept>
#include <string>

namespace hmsphere {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (bad n, m, H_m, v, C, k).
class DomainError : public Error {
public:
    using Error::Error;
};

/// H_m lies outside the open existence interval (h_low, h_high) for the requested k.
class BracketError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure hit its iteration or refinement limit.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// An algebraic identity that must hold exactly was violated beyond tolerance.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

}  // namespace hmsphere
