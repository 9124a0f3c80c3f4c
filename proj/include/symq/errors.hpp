#pragma once

#include <stdexcept>
#include <string>

namespace symq {

/// Binary series operation on operands of different truncation order.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Division by a series with no invertible leading term, or evaluation of
/// a quotient at a zero of the denominator.
class SingularDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A parameter outside its admissible range (q, k, alpha, n, r, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input is not of the negative-coefficient form z - sum a_n z^n, a_n >= 0.
class FormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Conic-domain coefficients requested for a k with no built-in map.
class UnsupportedRegime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Extreme-point weights would be negative (input is not a class member).
class DecompositionInfeasible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed function file, conic block or report input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace symq
