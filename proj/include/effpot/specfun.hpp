#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "effpot/types.hpp"

namespace effpot {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// Q(m,n) = a m^2 + b m n + c n^2, shifted by q.
struct QuadraticForm {
    double a = 1, b = 0, c = 1, q = 0;
    double delta() const { return 4 * a * c - b * b; }
};

// K_nu(z) for integer and half-integer nu >= 0.
double bessel_k(double nu, double z);

double gamma_fn(double x);
double digamma(double x);

double riemann_zeta(double s);
// zeta'(s) for s <= 0
double riemann_zeta_deriv(double s);

// zeta(s, a), a in (0, 1]
double hurwitz_zeta(double s, double a);
// lim_{s->1} (zeta(s,a) - 1/(s-1)) = -psi(a)
double hurwitz_regularized_at_1(double a);

// (sum cos(n beta)/n^s, sum sin(n beta)/n^s), integer s >= 2, beta in [0, 2 pi)
std::pair<double, double> polylog_circle(int s, double beta);

// sum_{n>=1} [w (n+alpha)^2 + m2]^(-nu) and its continuation
double epstein_zeta_1d(double nu, double w, double alpha, double m2);

// sum_{n>=1} (n^2 + p)^(-s), continued through the Bessel expansion
double epstein_hurwitz_zeta(double s, double p, const SeriesConfig& cfg = {});

struct LatticeSum {
    double value = 0;
    std::vector<double> outer_terms;  // magnitudes of the Bessel-series terms
};

// sum over (m,n) in Z^2 of (a m^2 + b m n + c n^2 + q)^(-s)
double chowla_selberg(double s, const QuadraticForm& f, const SeriesConfig& cfg = {});
LatticeSum chowla_selberg_detailed(double s, const QuadraticForm& f, const SeriesConfig& cfg = {});

// sum over n in Z^N of (sum_i w_i n_i^2 + v2)^(-s); origin skipped when v2 = 0
double epstein_zeta_nd(double s, const std::vector<double>& weights, double v2,
                       double rel_tol = 1e-12);

namespace detail {

double bernoulli_number(int n);
// Euler-Maclaurin zeta(s, a) for any a > 0, s > -1, s != 1
double hurwitz_zeta_em(double s, double a);
// Hurwitz's Fourier formula, s < 0, a in (0, 1]
double hurwitz_zeta_fourier(double s, double a);
// zeta(s, a) for any a > 0 (ladder into (0, 1])
double hurwitz_zeta_any(double s, double a);
// Li_r(e^{i mu}) for real r > 1
std::complex<double> polylog_unit(double r, double mu);
// K_nu(z) for arbitrary real order via its integral representation
double bessel_k_any(double nu, double z);
// 1/Gamma(x), zero at the poles
double rgamma(double x);
// sum_{n in Z} ((n + theta)^2 + p)^(-s) for theta in {0, 1/2}
double epstein_hurwitz_two_sided(double s, double p, bool half_shift, const SeriesConfig& cfg);

}  // namespace detail

}  // namespace effpot
