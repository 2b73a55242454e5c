#include <cmath>
#include <complex>

#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

namespace {

bool is_integer(double x) { return x == std::floor(x); }

// Euler-Maclaurin tail pieces at X = a + N for zeta(s, a)
double em_tail(double s, double X) {
    double v = std::pow(X, 1 - s) / (s - 1) + 0.5 * std::pow(X, -s);
    double poch = s;  // (s)_{2j-1}
    double xp = std::pow(X, -s - 1);
    double fact = 2;  // (2j)!
    for (int j = 1; j <= 20; ++j) {
        double t = detail::bernoulli_number(2 * j) / fact * poch * xp;
        v += t;
        if (std::fabs(t) < 1e-18 * std::fabs(v)) break;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        xp /= X * X;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return v;
}

// -sum ln n / n^x for x > 1, by differentiating the Euler-Maclaurin formula
double zeta_deriv_above_one(double x) {
    const int N = 20 + int(std::fabs(x));
    double sum = 0;
    for (int k = 2; k < N; ++k) sum -= std::log(double(k)) * std::pow(double(k), -x);
    const double X = N, lX = std::log(X);
    double t0 = std::pow(X, 1 - x) / (x - 1);
    sum += -lX * t0 - t0 / (x - 1);
    sum += -0.5 * lX * std::pow(X, -x);
    double poch = x, dlog = 1 / x;
    double xp = std::pow(X, -x - 1);
    double fact = 2;
    for (int j = 1; j <= 20; ++j) {
        double base = detail::bernoulli_number(2 * j) / fact * poch * xp;
        double t = base * (dlog - lX);
        sum += t;
        if (std::fabs(t) < 1e-18 * std::fabs(sum)) break;
        poch *= (x + 2 * j - 1) * (x + 2 * j);
        dlog += 1 / (x + 2 * j - 1) + 1 / (x + 2 * j);
        xp /= X * X;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return sum;
}

}  // namespace

double detail::hurwitz_zeta_em(double s, double a) {
    if (s == 1) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (!(a > 0)) throw DomainError("hurwitz_zeta: offset must be positive");
    const int N = 12 + int(std::fabs(s));
    double sum = 0;
    for (int k = 0; k < N; ++k) sum += std::pow(a + k, -s);
    return sum + em_tail(s, a + N);
}

double riemann_zeta(double s) {
    if (s == 1) throw PoleError("riemann_zeta: pole at s = 1");
    if (s == 0) return -0.5;
    if (s < 0 && is_integer(s)) {
        int n = int(-s);
        if (n % 2 == 0) return 0.0;
        return -detail::bernoulli_number(n + 1) / (n + 1);
    }
    if (s >= 0.5) return detail::hurwitz_zeta_em(s, 1.0);
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    double lg = s * std::log(2.0) + (s - 1) * std::log(kPi) + std::lgamma(1 - s);
    return std::exp(lg) * std::sin(kPi * s / 2) * riemann_zeta(1 - s);
}

double riemann_zeta_deriv(double s) {
    if (s > 0) throw DomainError("riemann_zeta_deriv: supported for s <= 0");
    if (s == 0) return -0.5 * std::log(2 * kPi);
    if (is_integer(s) && int(-s) % 2 == 0) {
        // zeta'(-2j) = (-1)^j (2j)! zeta(2j+1) / (2 (2 pi)^{2j})
        int j = int(-s) / 2;
        double lg = std::lgamma(2.0 * j + 1) - 2.0 * j * std::log(2 * kPi);
        double v = std::exp(lg) * riemann_zeta(2.0 * j + 1) / 2;
        return (j % 2) ? -v : v;
    }
    // differentiate zeta(s) = chi(s) zeta(1-s)
    double chi = std::exp(s * std::log(2.0) + (s - 1) * std::log(kPi) + std::lgamma(1 - s)) *
                 std::sin(kPi * s / 2);
    double zs = riemann_zeta(s);
    double dlogchi = std::log(2 * kPi) + kPi / 2 / std::tan(kPi * s / 2) - digamma(1 - s);
    return zs * dlogchi - chi * zeta_deriv_above_one(1 - s);
}

std::complex<double> detail::polylog_unit(double r, double mu) {
    if (!(r > 1)) throw DomainError("polylog on the unit circle needs order > 1");
    mu = std::remainder(mu, 2 * kPi);
    if (mu == 0) return riemann_zeta(r);
    const std::complex<double> z(0, mu);
    std::complex<double> sum = 0;
    const bool integer_order = is_integer(r);
    const int n = int(r);
    if (integer_order) {
        double h = 0;
        for (int i = 1; i < n; ++i) h += 1.0 / i;
        std::complex<double> lg(std::log(std::fabs(mu)), mu > 0 ? -kPi / 2 : kPi / 2);
        sum += std::pow(z, n - 1) / std::tgamma(double(n)) * (h - lg);
    } else {
        double ph = (mu > 0 ? -kPi / 2 : kPi / 2) * (r - 1);
        sum += std::tgamma(1 - r) * std::pow(std::fabs(mu), r - 1) * std::polar(1.0, ph);
    }
    std::complex<double> zk = 1;  // z^k / k!
    int small = 0;
    for (int k = 0; k < 400; ++k) {
        if (k > 0) zk *= z / double(k);
        if (integer_order && k == n - 1) continue;
        std::complex<double> t = riemann_zeta(r - k) * zk;
        sum += t;
        if (k > r + 2) {
            small = (std::abs(t) < 1e-17 * std::abs(sum)) ? small + 1 : 0;
            if (small >= 3) break;
        }
    }
    return sum;
}

std::pair<double, double> polylog_circle(int s, double beta) {
    if (s < 2) throw DomainError("polylog_circle: order must be >= 2");
    if (!(beta >= 0 && beta < 2 * kPi)) throw DomainError("polylog_circle: beta must lie in [0, 2 pi)");
    auto li = detail::polylog_unit(double(s), beta);
    return {li.real(), li.imag()};
}

double detail::hurwitz_zeta_fourier(double s, double a) {
    if (!(s < 0)) throw DomainError("hurwitz Fourier form needs s < 0");
    if (!(a > 0 && a <= 1)) throw DomainError("hurwitz_zeta: offset must lie in (0, 1]");
    auto li = polylog_unit(1 - s, 2 * kPi * a);
    double pref = 2 * std::exp(std::lgamma(1 - s) + (s - 1) * std::log(2 * kPi));
    return pref * (std::sin(kPi * s / 2) * li.real() + std::cos(kPi * s / 2) * li.imag());
}

double detail::hurwitz_zeta_any(double s, double a) {
    if (!(a > 0)) throw DomainError("hurwitz_zeta: offset must be positive");
    if (s >= 0) return hurwitz_zeta_em(s, a);
    // zeta(s, a) = zeta(s, a0) - sum_{k<n} (a0 + k)^{-s}, a = a0 + n, a0 in (0, 1]
    double a0 = a - std::floor(a);
    if (a0 == 0) a0 = 1;
    int n = int(std::lround(a - a0));
    double v = hurwitz_zeta_fourier(s, a0);
    for (int k = 0; k < n; ++k) v -= std::pow(a0 + k, -s);
    return v;
}

double hurwitz_zeta(double s, double a) {
    if (s == 1) throw PoleError("hurwitz_zeta: pole at s = 1");
    if (!(a > 0 && a <= 1)) throw DomainError("hurwitz_zeta: offset must lie in (0, 1]");
    if (s >= 0) return detail::hurwitz_zeta_em(s, a);
    return detail::hurwitz_zeta_fourier(s, a);
}

double hurwitz_regularized_at_1(double a) {
    if (!(a > 0 && a <= 1)) throw DomainError("hurwitz_regularized_at_1: offset must lie in (0, 1]");
    return -digamma(a);
}

}  // namespace effpot
