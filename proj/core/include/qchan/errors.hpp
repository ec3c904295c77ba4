#pragma once

#include <stdexcept>
#include <string>

namespace qchan {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A numeric argument is outside its documented domain.
struct DomainError : Error {
    using Error::Error;
};

// Operands have incompatible dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Eigendecomposition input fails the Hermitian tolerance.
struct NonHermitianInput : Error {
    using Error::Error;
};

// Input fails a density-matrix check; the message names the violated check.
struct NotDensityMatrix : Error {
    using Error::Error;
};

// Kraus operators do not sum to a trace-preserving map.
struct NotTracePreserving : Error {
    using Error::Error;
};

struct EmptyOperatorList : Error {
    using Error::Error;
};

// A matrix required to be unitary is not.
struct NotUnitary : Error {
    using Error::Error;
};

// A closed form valid only for unitary channels was asked of a general one.
struct NotUnitaryChannel : Error {
    using Error::Error;
};

// A bound was requested outside the scope of the theorem that provides it.
struct TheoremScopeError : Error {
    using Error::Error;
};

}  // namespace qchan
