#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// interval
struct DivisionByIntervalContainingZero : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct UnknownConstant : Error { using Error::Error; };
struct NegativeBound : Error { using Error::Error; };

// matrix
struct InvalidRho : Error { using Error::Error; };

// spectral
struct LambdaTooSmall : Error { using Error::Error; };
struct NoSignChange : Error { using Error::Error; };
struct TolUnreachable : Error { using Error::Error; };
struct AlphaTooLarge : Error { using Error::Error; };
struct PivotNotUnit : Error { using Error::Error; };
struct CertificationFailed : Error { using Error::Error; };
struct OrthogonalStart : Error { using Error::Error; };

// density
struct NonPositiveNormalization : Error { using Error::Error; };
struct MaxIterExceeded : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// measure
struct ZeroImageMass : Error { using Error::Error; };
struct AtomsPresent : Error { using Error::Error; };

// simulator
struct InsufficientSamples : Error { using Error::Error; };

// cli / report
struct MissingInput : Error { using Error::Error; };
struct InconsistentResults : Error { using Error::Error; };

}  // namespace renyi
