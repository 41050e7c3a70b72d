#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, index out of range, wrong tuple length.
class ParseError : public Error {
public:
    using Error::Error;
};

// The input is well formed but an operation's precondition does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class DimensionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Odd-colorings are only defined for an even number of indices.
class OddArityError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotSymmetricError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotNonnegativeError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class ReducibleError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class CertificateError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class OutOfContractError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotExactError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// Power iteration failed to close the Collatz-Wielandt bracket.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double lower, double upper, long iterations)
        : Error(what), lower_(lower), upper_(upper), iterations_(iterations) {}

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    long iterations() const noexcept { return iterations_; }

private:
    double lower_;
    double upper_;
    long iterations_;
};

class SearchBudgetExceeded : public Error {
public:
    using Error::Error;
};

// Every candidate interpolation node made the Macaulay denominator vanish.
class DegenerateResultantError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperspec
