#pragma once

#include <stdexcept>
#include <string>

namespace wordgrid {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrivialWordError : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct IndexOutOfRangeError : Error {
    using Error::Error;
};
struct NotPeriodicError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct GcdError : Error {
    using Error::Error;
};
struct CertificateInvalidError : Error {
    using Error::Error;
};
struct BudgetExceededError : Error {
    using Error::Error;
};
struct UnmappedLetterError : Error {
    using Error::Error;
};
struct MixedParityError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct EmptySupportError : Error {
    using Error::Error;
};

}  // namespace wordgrid
