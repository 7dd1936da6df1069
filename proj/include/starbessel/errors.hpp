#pragma once

#include <stdexcept>
#include <string>

namespace starbessel {

/// Base class for every failure raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the validity domain of the operation.
class domain_error : public error {
public:
    using error::error;
};

/// The requested quantity has a pole (or a vanishing denominator) at the argument.
class pole_error : public error {
public:
    using error::error;
};

/// A series did not reach its stopping tolerance within the term budget.
class convergence_error : public error {
public:
    using error::error;
};

/// A root search could not find the sign changes it needs.
class bracket_error : public error {
public:
    using error::error;
};

/// Hypothesis of the Shah-Trimble criterion is violated (a zero inside the closed disk).
class hypothesis_error : public error {
public:
    using error::error;
};

} // namespace starbessel
