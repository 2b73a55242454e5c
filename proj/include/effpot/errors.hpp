#pragma once

#include <stdexcept>
#include <string>

namespace effpot {

// Every library failure derives from Error so front ends can map it to one exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

// Gamma at a non-positive integer, zeta at s = 1.  Callers wanting the
// regularized value go through the laurent module instead.
struct PoleError : Error {
    using Error::Error;
};

struct DivergenceError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct ResidualPoleError : Error {
    double pole;
    ResidualPoleError(const std::string& what, double p) : Error(what), pole(p) {}
};

}  // namespace effpot
