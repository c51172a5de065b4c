#pragma once

#include <stdexcept>
#include <string>

namespace couette {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain / configuration errors.
struct DegenerateDenominator : Error { using Error::Error; };
struct ZeroWavenumber : Error { using Error::Error; };
struct ZeroReynolds : Error { using Error::Error; };
struct NonpositiveH : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };

// Discretization errors.
struct TooFewNodes : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };

// Numerical failures.
struct SolverFailure : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct SingularStep : Error { using Error::Error; };
struct NonPositiveEnergy : Error { using Error::Error; };

} // namespace couette
