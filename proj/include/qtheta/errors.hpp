#pragma once

#include <stdexcept>

namespace qtheta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coefficient requested above the series order.
struct UnknownCoefficient : Error {
    using Error::Error;
};

// Exponent is not a multiple of 1/grain.
struct NotRepresentable : Error {
    using Error::Error;
};

// Division by a series whose leading coefficient is not +-1.
struct NonUnit : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct UnknownIdentity : Error {
    using Error::Error;
};

// Brute-force enumeration requested above its ceiling.
struct AboveCeiling : Error {
    using Error::Error;
};

}  // namespace qtheta
