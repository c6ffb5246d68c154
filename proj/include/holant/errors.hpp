#pragma once

#include <stdexcept>
#include <string>

namespace holant {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the inputs failed (bad vertex index, mismatched
/// tensor degree, invalid parameters, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The model or evaluation point lies outside the certified zero-free region.
class OutsideRegionError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An enumeration would exceed the configured work budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed graph, model or command-line input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// symmetric_decompose could not factor the matrix.
class DecompositionFailed : public Error {
public:
    using Error::Error;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace holant

#include <complex>
#include <vector>

namespace holant {

/// poly_roots did not converge; carries the last iterates.
class RootFindingError : public ConvergenceError {
public:
    RootFindingError(const std::string &what, std::vector<std::complex<double>> partial)
        : ConvergenceError(what), partial(std::move(partial))
    {
    }
    std::vector<std::complex<double>> partial;
};

}  // namespace holant
