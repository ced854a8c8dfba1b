#pragma once

#include <stdexcept>
#include <string>

namespace fdirac {

/// Base class of every error raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A pivot fell below the relative threshold in a linear solve.
struct SingularMatrix : Error {
    using Error::Error;
};

/// The instance factorizer rejected a group element.
struct NotFactorizable : Error {
    using Error::Error;
};

/// A matrix does not lie in the span of the descriptor basis.
struct BasisExpansionFailure : Error {
    using Error::Error;
};

/// The Dirac matrix is singular at the requested point.
struct NotSecondClass : Error {
    using Error::Error;
};

/// A dual vector required to be a character is not one.
struct NotCharacter : Error {
    using Error::Error;
};

/// A phase point does not lie on the requested momentum level set.
struct NotOnLevelSet : Error {
    using Error::Error;
};

/// The example metric is undefined (|beta| too small).
struct SingularConfiguration : Error {
    using Error::Error;
};

/// Input that cannot be processed (zero column, bad shape).
struct DegenerateInput : Error {
    using Error::Error;
};

}  // namespace fdirac
