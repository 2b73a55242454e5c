#include "effpot/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "effpot/errors.hpp"

namespace effpot {

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg) {
    using boost::math::quadrature::gauss_kronrod;
    double err = 0, l1 = 0;
    double v = gauss_kronrod<double, 61>::integrate(f, a, b, cfg.max_subdivisions, cfg.rel_tol,
                                                    &err, &l1);
    if (!std::isfinite(v))
        throw ConvergenceError("quadrature produced a non-finite value");
    // err is |Kronrod - Gauss|, a pessimistic bound on the Kronrod value
    if (err > std::max(cfg.abs_tol, 1e-6 * l1))
        throw ConvergenceError("quadrature did not converge");
    return {v, err};
}

QuadResult integrate_thermal(const std::function<double(double)>& g, double scale,
                             const QuadConfig& cfg) {
    // exp(-k/scale) < 1e-320 beyond sinh(u) = 740
    const double umax = std::asinh(740.0);
    auto h = [&](double u) {
        double k = scale * std::sinh(u);
        return g(k) * scale * std::cosh(u);
    };
    // split so the narrow region near u = 0 gets its own panel
    QuadResult r1 = integrate(h, 0.0, 1.0, cfg);
    QuadResult r2 = integrate(h, 1.0, umax, cfg);
    return {r1.value + r2.value, r1.abs_err + r2.abs_err};
}

}  // namespace effpot
