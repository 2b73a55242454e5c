#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

namespace {

// K_{n+1/2}(z) = sqrt(pi/2z) e^{-z} sum_{k<=n} (n+k)! / (k! (n-k)! (2z)^k)
double k_half_integer(int n, double z) {
    double sum = 0, term = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) term *= double(n + k) * (n - k + 1) / (k * 2.0 * z);
        sum += term;
    }
    return std::sqrt(kPi / (2 * z)) * std::exp(-z) * sum;
}

// K0, K1 by their power series, z <= 2
void k01_series(double z, double& k0, double& k1) {
    const double lz = std::log(z / 2);
    const double y = z * z / 4;
    // I0, I1 and the psi-weighted partner series
    double i0 = 0, i1 = 0, s0 = 0, s1 = 0;
    double t0 = 1;        // y^k / (k!)^2
    double t1 = 1;        // y^k / (k! (k+1)!)
    double h = 0;         // harmonic number H_k
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            t0 *= y / (double(k) * k);
            t1 *= y / (double(k) * (k + 1));
            h += 1.0 / k;
        }
        double psi1 = h - kEulerGamma;              // psi(k+1)
        double psi2 = psi1 + 1.0 / (k + 1);         // psi(k+2)
        i0 += t0;
        i1 += t1;
        s0 += t0 * psi1;
        s1 += t1 * (psi1 + psi2);
        if (t0 < 1e-18 * i0 && k > 2) break;
    }
    i1 *= z / 2;
    k0 = -lz * i0 + s0;
    k1 = 1 / z + lz * i1 - z / 4 * s1;
}

// K0, K1 by Steed's continued fraction (Temme's CF2), z > 2
void k01_cf2(double z, double& k0, double& k1) {
    const double a1 = 0.25;  // 1/4 - mu^2, mu = 0
    double b = 2 * (1 + z);
    double d = 1 / b;
    double h = d, delh = d;
    double q1 = 0, q2 = 1;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1 + q * delh;
    for (int i = 1; i < 10000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2;
        d = 1 / (b + a * d);
        delh = (b * d - 1) * delh;
        h += delh;
        double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < 1e-17) break;
    }
    h = a1 * h;
    k0 = std::sqrt(kPi / (2 * z)) * std::exp(-z) / s;
    k1 = k0 * (z + 0.5 - h) / z;
}

}  // namespace

double bessel_k(double nu, double z) {
    if (!(z > 0)) throw DomainError("bessel_k: z must be positive");
    double twice = 2 * nu;
    if (nu < 0 || twice != std::floor(twice))
        throw DomainError("bessel_k: order must be a non-negative integer or half-integer");
    int m = int(twice);
    if (m % 2) return k_half_integer(m / 2, z);

    int n = m / 2;
    double k0, k1;
    if (z <= 2)
        k01_series(z, k0, k1);
    else
        k01_cf2(z, k0, k1);
    if (n == 0) return k0;
    // upward recurrence is stable for K
    double km = k0, kc = k1;
    for (int j = 1; j < n; ++j) {
        double kn = km + 2.0 * j / z * kc;
        km = kc;
        kc = kn;
    }
    return kc;
}

double detail::bessel_k_any(double nu, double z) {
    if (!(z > 0)) throw DomainError("bessel_k: z must be positive");
    nu = std::fabs(nu);
    double twice = 2 * nu;
    if (twice == std::floor(twice)) return bessel_k(nu, z);
    // K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt; scale out e^{-z}
    auto f = [&](double t) { return std::exp(-z * (std::cosh(t) - 1) + nu * t) * 0.5 *
                                    (1 + std::exp(-2 * nu * t)); };
    // integrand below e^{-745} once z (cosh t - 1) - nu t > 745
    double tmax = 1;
    while (z * (std::cosh(tmax) - 1) - nu * tmax < 760) tmax *= 1.5;
    double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, tmax, 20, 1e-15);
    return v * std::exp(-z);
}

}  // namespace effpot
