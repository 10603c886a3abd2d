#pragma once

#include <stdexcept>
#include <string>

namespace uvpack {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry ingestion / validation.
struct DegeneratePatch : Error { using Error::Error; };
struct EmptySet : Error { using Error::Error; };
struct EmptyProblem : Error { using Error::Error; };
struct AllPatchesDegenerate : Error { using Error::Error; };

// Optimizer.
struct InvalidAction : Error { using Error::Error; };
struct InfeasibleState : Error { using Error::Error; };

// Networks / weight files.
struct WeightShapeError : Error { using Error::Error; };
struct VersionMismatch : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Training.
struct EmptyDataset : Error { using Error::Error; };

// Result/problem pairing.
struct InconsistentResult : Error { using Error::Error; };

} // namespace uvpack
