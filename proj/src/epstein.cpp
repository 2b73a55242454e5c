#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>

#include "effpot/detail/kahan.hpp"
#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

namespace {

bool is_integer(double x) { return x == std::floor(x); }

// sum_{k>=1} sign^k k^{s-1/2} K_{s-1/2}(2 pi k sqrt(p))
double bessel_tail(double s, double p, bool alternate, const SeriesConfig& cfg,
                   std::vector<double>* terms = nullptr) {
    const double nu = s - 0.5;
    const double x = 2 * kPi * std::sqrt(p);
    detail::KahanSum sum;
    detail::Truncation stop(cfg.rel_tol * 1e-3);
    for (int k = 1; k <= cfg.max_terms; ++k) {
        double t = std::pow(double(k), nu) * detail::bessel_k_any(nu, k * x);
        if (alternate && (k % 2)) t = -t;
        sum += t;
        if (terms) terms->push_back(std::fabs(t));
        if (t == 0 || stop.done(t, sum.value())) return sum.value();
    }
    throw ConvergenceError("epstein_hurwitz_zeta: Bessel tail did not converge");
}

}  // namespace

double epstein_hurwitz_zeta(double s, double p, const SeriesConfig& cfg) {
    if (!(p > 0)) throw DomainError("epstein_hurwitz_zeta: p must be positive");
    // -p^{-s}/2 + sqrt(pi) Gamma(s-1/2)/(2 Gamma(s)) p^{1/2-s}
    //   + 2 pi^s / Gamma(s) p^{1/4-s/2} sum_n n^{s-1/2} K_{s-1/2}(2 pi n sqrt p)
    const double rg = detail::rgamma(s);
    double v = -0.5 * std::pow(p, -s);
    if (rg == 0) return v;
    if (s - 0.5 <= 0 && is_integer(s - 0.5))
        throw PoleError("epstein_hurwitz_zeta: Gamma(s - 1/2) pole");
    v += std::sqrt(kPi) * std::tgamma(s - 0.5) * rg / 2 * std::pow(p, 0.5 - s);
    v += 2 * std::pow(kPi, s) * rg * std::pow(p, 0.25 - s / 2) * bessel_tail(s, p, false, cfg);
    return v;
}

double detail::epstein_hurwitz_two_sided(double s, double p, bool half_shift,
                                         const SeriesConfig& cfg) {
    // sum_{n in Z} ((n+theta)^2 + p)^{-s}
    //   = sqrt(pi) Gamma(s-1/2)/Gamma(s) p^{1/2-s}
    //   + 4 pi^s/Gamma(s) p^{1/4-s/2} sum_k cos(2 pi k theta) k^{s-1/2} K_{s-1/2}(2 pi k sqrt p)
    const double rg = rgamma(s);
    if (rg == 0) {
        if (!half_shift) return 0.0;  // 2 zeta_EH(-k) + p^k = 0
        throw DomainError("two-sided Epstein sum at a Gamma pole");
    }
    if (s - 0.5 <= 0 && is_integer(s - 0.5))
        throw PoleError("epstein sum: Gamma(s - 1/2) pole");
    double v = std::sqrt(kPi) * std::tgamma(s - 0.5) * rg * std::pow(p, 0.5 - s);
    v += 4 * std::pow(kPi, s) * rg * std::pow(p, 0.25 - s / 2) * bessel_tail(s, p, half_shift, cfg);
    return v;
}

double epstein_zeta_1d(double nu, double w, double alpha, double m2) {
    if (!(w > 0)) throw DomainError("epstein_zeta_1d: w must be positive");
    if (!(alpha >= 0)) throw DomainError("epstein_zeta_1d: alpha must be non-negative");
    if (!(m2 >= 0)) throw DomainError("epstein_zeta_1d: m2 must be non-negative");
    if (m2 == 0) {
        if (2 * nu <= 1) throw DivergenceError("epstein_zeta_1d: divergent for 2 nu <= 1 and m2 = 0");
        return std::pow(w, -nu) * detail::hurwitz_zeta_any(2 * nu, 1 + alpha);
    }
    const double p = m2 / w;
    if (2 * nu > 1) {
        // direct sum up to N, then the binomial series of the tail in p/(n+alpha)^2
        int N = int(std::ceil(10 * std::sqrt(p))) + 10;
        detail::KahanSum sum;
        for (int n = N; n >= 1; --n) sum += std::pow((n + alpha) * (n + alpha) + p, -nu);
        double x = N + 1 + alpha;
        double coef = 1, pl = 1;
        detail::KahanSum tail;
        for (int l = 0; l < 200; ++l) {
            if (l > 0) {
                coef *= -(nu + l - 1) / l;
                pl *= p;
            }
            double t = coef * pl * detail::hurwitz_zeta_any(2 * nu + 2 * l, x);
            tail += t;
            if (std::fabs(t) < 1e-18 * std::fabs(tail.value())) break;
        }
        return std::pow(w, -nu) * (sum.value() + tail.value());
    }
    // continuation through the Bessel form: only shifts where the sum folds symmetrically
    double frac = alpha - std::floor(alpha);
    int shift = int(std::floor(alpha));
    double v;
    double base;
    if (frac == 0) {
        v = epstein_hurwitz_zeta(nu, p);
        base = 0;
    } else if (frac == 0.5) {
        // sum_{n>=1} ((n+1/2)^2+p)^{-s} = half the two-sided sum minus the n=0 term
        v = 0.5 * detail::epstein_hurwitz_two_sided(nu, p, true, SeriesConfig{}) -
            std::pow(0.25 + p, -nu);
        base = 0.5;
    } else {
        throw DomainError("epstein_zeta_1d: continuation supported for alpha = 0 or 1/2 (mod 1)");
    }
    for (int j = 1; j <= shift; ++j) v -= std::pow((j + base) * (j + base) + p, -nu);
    return std::pow(w, -nu) * v;
}

LatticeSum chowla_selberg_detailed(double s, const QuadraticForm& f, const SeriesConfig& cfg) {
    const double a = f.a, b = f.b, q = f.q, D = f.delta();
    if (!(a > 0) || !(D > 0)) throw DomainError("chowla_selberg: form must be positive definite");
    if (!(q > 0)) throw DomainError("chowla_selberg: q must be positive");
    const double rg = detail::rgamma(s);
    if (rg == 0 || (s - 0.5 <= 0 && is_integer(s - 0.5)))
        throw PoleError("chowla_selberg: exceptional s");

    LatticeSum out;
    // the (0,0) lattice point, then the n = 0 row, then the rows n != 0
    double v = std::pow(q, -s);
    v += 2 * std::pow(a, -s) * epstein_hurwitz_zeta(s, q / a, cfg);
    v += std::pow(2.0, 2 * s) * std::sqrt(kPi) * std::pow(a, s - 1) * std::pow(D, 0.5 - s) *
         std::tgamma(s - 0.5) * rg * epstein_hurwitz_zeta(s - 0.5, 4 * a * q / D, cfg);

    const double pref = std::pow(2.0, s + 2.5) * std::pow(kPi, s) * rg / std::sqrt(a);
    detail::KahanSum bes;
    detail::Truncation stop(cfg.rel_tol * 1e-3);
    bool converged = false;
    for (int n = 1; n <= cfg.max_terms; ++n) {
        double inner = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            double r = std::sqrt(D + 4 * a * q / (double(d) * d));
            inner += std::pow(double(d), 1 - 2 * s) * std::pow(r, 0.5 - s) *
                     detail::bessel_k_any(s - 0.5, kPi * n / a * r);
        }
        double t = pref * std::pow(double(n), s - 0.5) * std::cos(kPi * n * b / a) * inner;
        bes += t;
        out.outer_terms.push_back(std::fabs(t));
        if (stop.done(t, v + bes.value()) || inner == 0) {
            converged = true;
            break;
        }
    }
    if (!converged) throw ConvergenceError("chowla_selberg: outer series did not converge");
    out.value = v + bes.value();
    return out;
}

double chowla_selberg(double s, const QuadraticForm& f, const SeriesConfig& cfg) {
    return chowla_selberg_detailed(s, f, cfg).value;
}

double epstein_zeta_nd(double s, const std::vector<double>& weights, double v2, double rel_tol) {
    const int N = int(weights.size());
    if (N == 0) throw DomainError("epstein_zeta_nd: need at least one weight");
    for (double w : weights)
        if (!(w > 0)) throw DomainError("epstein_zeta_nd: weights must be positive");
    if (!(v2 >= 0)) throw DomainError("epstein_zeta_nd: v2 must be non-negative");
    if (N == 1) {
        double one = epstein_zeta_1d(s, weights[0], 0, v2);
        return 2 * one + (v2 > 0 ? std::pow(v2, -s) : 0.0);
    }
    if (!(2 * s > N)) throw DivergenceError("epstein_zeta_nd: needs 2 s > N for N >= 2");

    double wprod = 1;
    for (double w : weights) wprod *= w;
    const double SN = 2 * std::pow(kPi, N / 2.0) / std::tgamma(N / 2.0);

    // integral of (Q + v2)^{-s} over Q > R^2, in the variable u = Q
    auto tail = [&](double R2) {
        auto g = [&](double t) {
            // u = R2 / t, t in (0, 1]
            double u = R2 / t;
            return std::pow(u + v2, -s) * std::pow(u, N / 2.0 - 1) * R2 / (t * t);
        };
        double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, 1.0, 20, 1e-14);
        return SN / 2 / std::sqrt(wprod) * v;
    };

    // shell sum: all lattice points with Q(n) <= R^2, deepest coordinate first
    auto shell = [&](double R2) {
        detail::KahanSum sum;
        std::vector<int> n(N, 0);
        std::function<void(int, double)> rec = [&](int i, double Q) {
            if (i == N) {
                if (Q == 0 && v2 == 0) return;
                sum += std::pow(Q + v2, -s);
                return;
            }
            int lim = int(std::floor(std::sqrt((R2 - Q) / weights[i])));
            for (int k = -lim; k <= lim; ++k) {
                double Qn = Q + weights[i] * double(k) * k;
                if (Qn <= R2) rec(i + 1, Qn);
            }
        };
        rec(0, 0.0);
        return sum.value();
    };

    // grow R until the tail (which is added back as an integral) is small enough
    // that the lattice-versus-integral mismatch, roughly tail / R, is below tolerance
    double R = 8;
    double est = shell(R * R) + tail(R * R);
    for (int it = 0; it < 40; ++it) {
        double t = tail(R * R);
        if (t / R < rel_tol * 1e-2 * std::fabs(est)) break;
        R *= 1.5;
        est = shell(R * R) + tail(R * R);
    }
    return est;
}

}  // namespace effpot
