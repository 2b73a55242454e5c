#include <cmath>

#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0 && x == std::floor(x); }

// B_{2k} for k = 0..15 as num/den pairs; beyond that the zeta relation is exact
// to double precision anyway.
const double kB2k[16] = {
    1.0,
    1.0 / 6,
    -1.0 / 30,
    1.0 / 42,
    -1.0 / 30,
    5.0 / 66,
    -691.0 / 2730,
    7.0 / 6,
    -3617.0 / 510,
    43867.0 / 798,
    -174611.0 / 330,
    854513.0 / 138,
    -236364091.0 / 2730,
    8553103.0 / 6,
    -23749461029.0 / 870,
    8615841276005.0 / 14322,
};

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x))
        throw PoleError("gamma_fn: pole at non-positive integer");
    return std::tgamma(x);
}

double detail::rgamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x > 171.0) return 0.0;
    return 1.0 / std::tgamma(x);
}

double digamma(double x) {
    if (is_nonpositive_integer(x))
        throw PoleError("digamma: pole at non-positive integer");
    double acc = 0;
    if (x < 0) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        acc -= kPi / std::tan(kPi * x);
        x = 1 - x;
    }
    while (x < 10) {
        acc -= 1 / x;
        x += 1;
    }
    double x2 = 1 / (x * x);
    double series = 0, pw = x2;
    for (int k = 1; k <= 8; ++k) {
        series += kB2k[k] / (2 * k) * pw;
        pw *= x2;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

double detail::bernoulli_number(int n) {
    if (n < 0) throw DomainError("bernoulli_number: negative index");
    if (n == 1) return -0.5;
    if (n % 2) return 0.0;
    int k = n / 2;
    if (k < 16) return kB2k[k];
    // B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
    double lg = std::lgamma(n + 1.0) + std::log(2.0) - n * std::log(2 * kPi);
    double z = 1 + std::pow(2.0, -n) + std::pow(3.0, -n);
    double v = std::exp(lg) * z;
    return (k % 2) ? v : -v;
}

}  // namespace effpot
