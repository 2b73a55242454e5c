#pragma once

#include <cmath>
#include <limits>

#include "effpot/errors.hpp"
#include "effpot/laurent.hpp"
#include "effpot/specfun.hpp"

// Factors of the form f(x0 + c eps) for the high-temperature assemblies.  A
// factor is either regular (a Jet) or carries a simple pole; a product may hold
// at most one pole.
namespace effpot::detail {

struct Factor {
    bool has_pole = false;
    LaurentValue lv;
    Jet jet;
};

inline Factor regular(double value, double slope) { return {false, {}, {value, slope}}; }

inline double unknown_slope() { return std::numeric_limits<double>::quiet_NaN(); }

// base^(e0 + c eps)
inline Jet pow_jet(double base, double e0, double c) {
    if (base == 0) {
        if (e0 <= 0) throw DomainError("pow_jet: zero base with non-positive exponent");
        return {0, 0};
    }
    double v = std::pow(base, e0);
    return {v, c * std::log(base) * v};
}

// Gamma(x0 + c eps)
inline Factor gamma_factor(double x0, double c) {
    if (x0 <= 0 && x0 == std::floor(x0)) {
        LaurentValue g = gamma_laurent(int(-x0));
        return {true, {g.pole / c, g.finite}, {}};
    }
    double g = std::tgamma(x0);
    return regular(g, c * g * digamma(x0));
}

inline LaurentValue product(const Jet& rest, const Factor& x, const Factor& y) {
    if (x.has_pole && y.has_pole) throw Error("double pole in a dimensional-regularization product");
    if (x.has_pole) return x.lv * (rest * y.jet);
    if (y.has_pole) return y.lv * (rest * x.jet);
    return {0, (rest * x.jet * y.jet).value};
}

}  // namespace effpot::detail
