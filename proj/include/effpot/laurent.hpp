#pragma once

#include "effpot/types.hpp"

namespace effpot {

// pole / eps + finite, the two leading Laurent coefficients in eps = d - d0.
struct LaurentValue {
    double pole = 0;
    double finite = 0;

    LaurentValue& operator+=(const LaurentValue& o) {
        pole += o.pole;
        finite += o.finite;
        return *this;
    }
};

inline LaurentValue operator+(LaurentValue x, const LaurentValue& y) { return x += y; }
inline LaurentValue operator-(const LaurentValue& x, const LaurentValue& y) {
    return {x.pole - y.pole, x.finite - y.finite};
}
inline LaurentValue operator*(double c, const LaurentValue& x) { return {c * x.pole, c * x.finite}; }

// A regular factor f(eps) ~ value + slope eps.  Only needed where it multiplies a pole.
struct Jet {
    double value = 0;
    double slope = 0;
};

inline Jet operator*(const Jet& x, const Jet& y) {
    return {x.value * y.value, x.value * y.slope + x.slope * y.value};
}
inline Jet operator*(double c, const Jet& x) { return {c * x.value, c * x.slope}; }

// (p/eps + f)(v + s eps) = p v / eps + (f v + p s)
inline LaurentValue operator*(const LaurentValue& x, const Jet& j) {
    return {x.pole * j.value, x.finite * j.value + x.pole * j.slope};
}

// Gamma(-n + delta) in delta
LaurentValue gamma_laurent(int n);

// zeta(1 + delta) in delta
LaurentValue zeta_laurent_at_1();

// finite part, or ResidualPoleError if |pole| > tol max(1, |finite|)
double assert_finite(const LaurentValue& v, double tol = 1e-10);

}  // namespace effpot
