#pragma once

#include <stdexcept>

namespace esnorm {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct OrderNotDivisible : Error {
    using Error::Error;
};
struct ZeroInput : Error {
    using Error::Error;
};
struct NoRoot : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct BadIndex : Error {
    using Error::Error;
};
struct BadM : Error {
    using Error::Error;
};
struct BadR : Error {
    using Error::Error;
};
struct Singular : Error {
    using Error::Error;
};

}  // namespace esnorm
