#pragma once

#include <functional>

#include "effpot/types.hpp"

namespace effpot {

struct QuadResult {
    double value = 0;
    double abs_err = 0;
};

// Adaptive Gauss-Kronrod on [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg = {});

// Integral over [0, inf) of g(k) where g decays like exp(-k/scale).  Uses
// k = scale sinh(u) so the decay becomes double exponential, then truncates at
// the point where exp(-k/scale) underflows.
QuadResult integrate_thermal(const std::function<double(double)>& g, double scale,
                             const QuadConfig& cfg = {});

}  // namespace effpot
