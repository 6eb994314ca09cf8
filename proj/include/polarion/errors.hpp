#pragma once

#include <stdexcept>
#include <string>

namespace polarion {

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleProximity : NumericalError {
    using NumericalError::NumericalError;
};
struct NoRootsFound : NumericalError {
    using NumericalError::NumericalError;
};
struct RootCountMismatch : NumericalError {
    using NumericalError::NumericalError;
};
struct ResolutionTooCoarse : NumericalError {
    using NumericalError::NumericalError;
};
struct ZeroNorm : NumericalError {
    using NumericalError::NumericalError;
};
struct UnstableHamiltonian : NumericalError {
    using NumericalError::NumericalError;
};
struct GridMismatch : NumericalError {
    using NumericalError::NumericalError;
};
struct DegenerateRapidities : NumericalError {
    using NumericalError::NumericalError;
};
struct LyapunovSingular : NumericalError {
    using NumericalError::NumericalError;
};
struct DimensionTooLarge : NumericalError {
    using NumericalError::NumericalError;
};
struct TruncationBreach : NumericalError {
    using NumericalError::NumericalError;
};
struct UnmatchedMode : NumericalError {
    using NumericalError::NumericalError;
};
struct NonConvergence : NumericalError {
    using NumericalError::NumericalError;
};
struct NegativeStateBeyondTolerance : NumericalError {
    using NumericalError::NumericalError;
};
struct VacuousPopulation : NumericalError {
    using NumericalError::NumericalError;
};
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace polarion
