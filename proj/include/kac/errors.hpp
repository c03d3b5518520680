#pragma once

#include <stdexcept>
#include <string>

namespace kac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonRegular : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct NotAtypicalPair : Error {
    using Error::Error;
};
struct DegreeMismatch : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct ThetaOutOfRange : Error {
    using Error::Error;
};
struct ThetaNotInThetaLambda : Error {
    using Error::Error;
};
struct MalformedCode : Error {
    using Error::Error;
};
struct InvalidCode : Error {
    using Error::Error;
};
struct StripInvariantViolation : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace kac
