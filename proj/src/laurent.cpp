#include "effpot/laurent.hpp"

#include <cmath>
#include <string>

#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

LaurentValue gamma_laurent(int n) {
    if (n < 0) throw DomainError("gamma_laurent: n must be non-negative");
    double r = 1;
    for (int k = 2; k <= n; ++k) r /= k;
    if (n % 2) r = -r;
    return {r, r * digamma(n + 1.0)};
}

LaurentValue zeta_laurent_at_1() { return {1.0, kEulerGamma}; }

double assert_finite(const LaurentValue& v, double tol) {
    if (std::fabs(v.pole) > tol * std::max(1.0, std::fabs(v.finite)))
        throw ResidualPoleError("residual 1/eps pole " + std::to_string(v.pole), v.pole);
    return v.finite;
}

}  // namespace effpot
