#pragma once

#include <stdexcept>
#include <string>

namespace causalbound {

// Base class for every error this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input files / construction-time validation (CSV, JSON, config invariants).
struct DataError : Error {
    using Error::Error;
};

// A support cell of the source distribution has no entry in the weight table.
struct MissingWeight : Error {
    using Error::Error;
};

// A weighting produced something that is not a probability distribution
// (negative weight, non-finite weight, or induced mass not summing to one).
struct InvalidRepresentation : Error {
    using Error::Error;
};

// An estimator needs both treatment arms but one is empty / has zero mass.
struct DegenerateTreatment : Error {
    using Error::Error;
};

// Frequency propensity model queried at a covariate cell it never saw.
struct EmptyStratum : Error {
    using Error::Error;
};

// A propensity score of exactly 0 or 1 reached an inverse weight.
struct ExtremePropensity : Error {
    using Error::Error;
};

// A covariate stratum is missing one treatment arm entirely.
struct EmptyArmInStratum : Error {
    using Error::Error;
};

// Distributions passed to a distance computation do not share support.
struct SupportMismatch : Error {
    using Error::Error;
};

// An estimator got an empty sample.
struct EmptyInput : Error {
    using Error::Error;
};

// Exact enumeration was requested for a space too large to enumerate.
struct TooLarge : Error {
    using Error::Error;
};

// Operation not defined for the requested mode (e.g. exact enumeration of a
// continuous-outcome generator).
struct UnsupportedMode : Error {
    using Error::Error;
};

}  // namespace causalbound
