#pragma once

#include <stdexcept>
#include <string>

namespace cohocalc {

/// Base class for every error thrown by the kernel and its front ends.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define COHOCALC_DEFINE_ERROR(Name)      \
    struct Name : Error {                \
        using Error::Error;              \
    }

// ring_core
COHOCALC_DEFINE_ERROR(DuplicateGenerator);
COHOCALC_DEFINE_ERROR(NonHomogeneousRule);
COHOCALC_DEFINE_ERROR(NonDecreasingRule);
COHOCALC_DEFINE_ERROR(NotConfluent);
COHOCALC_DEFINE_ERROR(MixedRings);
COHOCALC_DEFINE_ERROR(NonPositiveDegreeTerm);
COHOCALC_DEFINE_ERROR(UnknownTopMonomial);
COHOCALC_DEFINE_ERROR(NameCollision);

// spaces
COHOCALC_DEFINE_ERROR(NegativeGenus);
COHOCALC_DEFINE_ERROR(BadChernDegrees);
COHOCALC_DEFINE_ERROR(NotABundleRing);

// grr_lambda
COHOCALC_DEFINE_ERROR(UntaggedRing);
COHOCALC_DEFINE_ERROR(ModelMismatch);
COHOCALC_DEFINE_ERROR(OracleMismatch);

// mukai_k
COHOCALC_DEFINE_ERROR(MixedPolarization);

// cli
COHOCALC_DEFINE_ERROR(UnknownScenario);

#undef COHOCALC_DEFINE_ERROR

/// Error with a source position, thrown by the DSL front end.
struct DslError : Error {
    DslError(std::string msg, int line, int col)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

struct SyntaxError : DslError {
    SyntaxError(const std::string& expected, int line, int col)
        : DslError("expected " + expected, line, col), expected(expected) {}
    std::string expected;
};

struct UnknownIdentifier : DslError {
    using DslError::DslError;
};

struct DegreeMismatch : DslError {
    using DslError::DslError;
};

struct EvalTypeError : DslError {
    using DslError::DslError;
};

} // namespace cohocalc
