#include "effpot/twisted.hpp"

#include <cmath>
#include <string>

#include "effpot/compact.hpp"
#include "effpot/detail/dimreg.hpp"
#include "effpot/detail/kahan.hpp"
#include "effpot/errors.hpp"
#include "effpot/quadrature.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

namespace {

constexpr double kHalf = kCompactNormalization;

double solid_angle(int d) { return 2 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0); }

// cos(2 pi omega q) with the argument reduced first
double twist_cos(double omega, int q) {
    double f = std::fmod(omega * q, 1.0);
    return std::cos(2 * kPi * f);
}

struct Sums {
    double value = 0;
    double last = 0;
    int terms = 0;
};

Sums cos_bessel_sum(const TwistQuery& q, const SeriesConfig& cfg,
                    std::vector<std::pair<int, double>>* partial, double scale) {
    const double nu = (q.d + 1) / 2.0, a = q.m * q.L, m2nu = std::pow(q.m, 2 * nu);
    detail::KahanSum sum;
    detail::Truncation stop(cfg.rel_tol * 1e-2);
    Sums out;
    for (int k = 1; k <= cfg.max_terms; ++k) {
        double z = a * k;
        double env = m2nu * bessel_k(nu, z) * std::pow(2 / z, nu);
        double t = twist_cos(q.omega, k) * env;
        sum += t;
        out.last = t;
        out.terms = k;
        if (partial) partial->push_back({k, scale * sum.value()});
        // test the envelope: a zero cosine (omega = 1/4, odd k) says nothing about convergence
        if (stop.done(env, sum.value())) {
            out.value = sum.value();
            return out;
        }
    }
    throw ConvergenceError("twisted_bessel: series did not converge within max_terms");
}

// H(s0 - eps), H(s) = zeta(s, 1 + omega) + zeta(s, 2 - omega)
detail::Factor hurwitz_pair(double s0, double omega) {
    const double w1 = omega, w2 = 1 - omega;
    if (s0 == 1) {
        // zeta(1 - eps, a) = -1/eps - psi(a); zeta(s, 1 + w) = zeta(s, w) - w^{-s}
        double f = (hurwitz_regularized_at_1(w1) - 1 / w1) + (hurwitz_regularized_at_1(w2) - 1 / w2);
        return {true, {-2.0, f}, {}};
    }
    if (s0 > 1)
        return detail::regular(detail::hurwitz_zeta_any(s0, 1 + w1) + detail::hurwitz_zeta_any(s0, 1 + w2),
                               detail::unknown_slope());
    const double beta = 2 * kPi * omega;
    const int n = int(-s0);
    if (n % 2 == 0) {
        // at s = -2j the cosine part vanishes: H = -w1^{2j} - w2^{2j}
        const int j = n / 2;
        double value = -std::pow(w1, 2.0 * j) - std::pow(w2, 2.0 * j);
        double deriv;
        if (j == 0) {
            deriv = std::lgamma(1 + w1) + std::lgamma(1 + w2) - std::log(2 * kPi);
        } else {
            double c = polylog_circle(2 * j + 1, beta).first;
            double lg = std::lgamma(2.0 * j + 1) - (2.0 * j + 1) * std::log(2 * kPi);
            deriv = 2 * kPi * (j % 2 ? -1 : 1) * std::exp(lg) * c + std::log(w1) * std::pow(w1, 2.0 * j) +
                    std::log(w2) * std::pow(w2, 2.0 * j);
        }
        return detail::regular(value, -deriv);
    }
    // zeta(s, w) + zeta(s, 1 - w) = 4 Gamma(1-s) sin(pi s/2) (2 pi)^{s-1} sum cos(k beta)/k^{1-s}
    double c = polylog_circle(1 + n, beta).first;
    double v = 4 * std::exp(std::lgamma(1 - s0) + (s0 - 1) * std::log(2 * kPi)) * std::sin(kPi * s0 / 2) * c -
               std::pow(w1, -s0) - std::pow(w2, -s0);
    return detail::regular(v, detail::unknown_slope());
}

}  // namespace

void validate(const TwistQuery& q) {
    if (!(q.m >= 0)) throw DomainError("mass must be non-negative");
    if (!(q.L > 0)) throw DomainError("circumference must be positive");
    if (q.d < 2 || q.d > 5) throw DomainError("spatial dimension must be 2, 3, 4 or 5");
    if (!(q.omega >= 0 && q.omega < 1)) throw DomainError("twist omega must lie in [0, 1)");
}

EvalResult twisted_quadrature(const TwistQuery& q, const QuadConfig& cfg) {
    validate(q);
    const double L = q.L, m2 = q.m * q.m;
    const double s = std::sin(kPi * q.omega), s2 = 4 * s * s, c = std::cos(2 * kPi * q.omega);
    const int d = q.d;
    auto g = [&](double k) {
        if (k == 0) return 0.0;
        double x = L * std::sqrt(k * k + m2);
        double u = std::exp(-x);
        // 1 - 2 u cos beta + u^2 = (1 - u)^2 + 4 u sin^2(beta/2); the second form for small x,
        // log1p in the tail where the argument is 1 + O(u)
        if (u < 0.5) return std::pow(k, d - 1) * std::log1p(u * (u - 2 * c));
        double e = std::expm1(-x);
        return std::pow(k, d - 1) * std::log(e * e + s2 * u);
    };
    QuadResult r = integrate_thermal(g, 1 / L, cfg);
    const double pref = kHalf * solid_angle(d) / (L * std::pow(2 * kPi, d));
    EvalResult out;
    out.value = pref * r.value;
    out.abs_err_est = std::fabs(pref) * r.abs_err;
    out.strategy = Strategy::Quadrature;
    return out;
}

EvalResult twisted_bessel(const TwistQuery& q, const SeriesConfig& cfg) {
    validate(q);
    const double nu = (q.d + 1) / 2.0;
    EvalResult out;
    out.strategy = Strategy::BesselSeries;
    if (q.m == 0) {
        // -2 Gamma(nu) L^{-2 nu} pi^{-nu} sum cos(beta k) / k^{2 nu}
        double c = polylog_circle(q.d + 1, 2 * kPi * q.omega).first;
        out.value = -kHalf * 2 * std::tgamma(nu) * std::pow(q.L, -2 * nu) * std::pow(kPi, -nu) * c;
        return out;
    }
    const double C = -kHalf * 4 * std::pow(4 * kPi, -nu);
    Sums s = cos_bessel_sum(q, cfg, nullptr, 1);
    out.value = C * s.value;
    out.abs_err_est = 3 * std::fabs(C * s.last);
    out.terms_used = s.terms;
    return out;
}

std::vector<std::pair<int, double>> twisted_bessel_partial_sums(const TwistQuery& q, const SeriesConfig& cfg) {
    validate(q);
    if (q.m == 0) throw DomainError("partial sums need m > 0");
    const double nu = (q.d + 1) / 2.0;
    std::vector<std::pair<int, double>> out;
    cos_bessel_sum(q, cfg, &out, -kHalf * 4 * std::pow(4 * kPi, -nu));
    return out;
}

std::pair<std::complex<double>, std::complex<double>> phased_poisson(double lambda, double beta) {
    if (!(lambda > 0)) throw DomainError("phased_poisson: lambda must be positive");
    // terms below 1e-17 of the leading one are dropped
    const double cut = 40;
    std::complex<double> lhs = 0, rhs = 0;
    const int Q = int(std::sqrt(cut / lambda)) + 2;
    for (int q = Q; q >= 1; --q) {
        double w = std::exp(-lambda * double(q) * q);
        lhs += w * std::polar(1.0, -beta * q) + w * std::polar(1.0, beta * q);
    }
    lhs += 1.0;
    const int K = int((std::sqrt(4 * lambda * cut) + std::fabs(beta)) / (2 * kPi)) + 2;
    double r = 0;
    for (int k = K; k >= -K; --k) {
        double x = beta + 2 * kPi * k;
        r += std::exp(-x * x / (4 * lambda));
    }
    rhs = std::sqrt(kPi / lambda) * r;
    return {lhs, rhs};
}

HighTPieces twisted_highT_pieces(double m, double L, int d, double omega, const SeriesConfig& cfg) {
    validate(TwistQuery{m, L, d, omega, Strategy::HighTExpansion});
    if (omega == 0) throw DomainError("twisted_highT: omega must be positive (Hurwitz offset)");
    using detail::Factor;
    using detail::pow_jet;
    const double nu0 = (d + 1) / 2.0;
    const double a = m * L;
    const double p = (a / (2 * kPi)) * (a / (2 * kPi));
    const Factor one = detail::regular(1, 0);

    // -(1/2) 4 (4 pi)^{-nu} L^{-2 nu}
    const Jet pref = (-kHalf * 4) * (pow_jet(4 * kPi, -nu0, -0.5) * pow_jet(L, -2 * nu0, -1));
    const Jet two_pi = 0.5 * std::sqrt(kPi) * pow_jet(2 * kPi, d, 1);

    HighTPieces out;
    {
        Jet x1 = pow_jet(omega * omega + p, d / 2.0, 0.5);
        Jet x2 = pow_jet((1 - omega) * (1 - omega) + p, d / 2.0, 0.5);
        Jet modes{x1.value + x2.value, x1.slope + x2.slope};
        out.terms.push_back(detail::product(pref * two_pi * modes, detail::gamma_factor(0.5 - nu0, -0.5), one));
    }
    {
        Jet rb = -0.25 * pow_jet(a, 2 * nu0, 1);
        out.terms.push_back(detail::product(pref * rb, detail::gamma_factor(-nu0, -0.5), one));
    }
    const bool odd = d % 2;
    const int n_even = d / 2;
    detail::Truncation stop(cfg.rel_tol * 1e-3);
    double coef = 1;
    for (int l = 0; l <= cfg.max_terms; ++l) {
        if (l > 0) coef *= -p / l;
        if (odd && l > cfg.sigma) break;
        LaurentValue t = detail::product(pref * (coef * two_pi), detail::gamma_factor(0.5 - nu0 + l, -0.5),
                                         hurwitz_pair(2.0 * l - d, omega));
        out.terms.push_back(t);
        if (!odd && l > n_even && l >= cfg.sigma) {
            double scale = 0;
            for (auto& x : out.terms) scale += x.finite;
            if (stop.done(t.finite, scale) || coef == 0) break;
        }
    }
    for (auto& x : out.terms) out.total += x;
    return out;
}

LaurentValue twisted_highT(const TwistQuery& q, const SeriesConfig& cfg, Diagnostics* diag) {
    validate(q);
    if (diag && q.m * q.L >= 1)
        diag->warnings.push_back("twisted_highT: mL = " + std::to_string(q.m * q.L) +
                                 " is outside the expansion's accuracy range (mL < 1)");
    return twisted_highT_pieces(q.m, q.L, q.d, q.omega, cfg).total;
}

Transcription twisted_closed_d3(double m, double L, double omega) {
    if (!(m > 0) || !(L > 0)) throw DomainError("twisted_closed_d3: need m > 0, L > 0");
    if (!(omega > 0 && omega < 1)) throw DomainError("twisted_closed_d3: omega must lie in (0, 1)");
    const double pi2 = kPi * kPi, g = kEulerGamma, m4 = std::pow(m, 4);
    const double b = 2 * kPi * omega, al = m * L;
    double v = 3 * m4 / (64 * pi2) - g * m4 / (32 * pi2) -
               m4 * std::pow(1 + b * b / (al * al), 1.5) / (6 * kPi * al) +
               2 * m4 * std::sqrt(al * al) * std::cos(b) / (pi2 * std::pow(al, 5)) +
               m4 * std::log(2.0) / (16 * pi2) + m4 * std::log(kPi) / (32 * pi2) + m4 * std::log(kPi) / (32 * pi2) -
               m4 * std::log(al * al) / (32 * pi2) - m4 * digamma(-1.5) / (32 * pi2) -
               m4 * digamma(0.5) / (32 * pi2) + m4 * digamma(2.5) / (32 * pi2) +
               m4 * digamma(-b / (2 * kPi)) / (32 * pi2) + m4 * digamma(b / (2 * kPi)) / (32 * pi2);
    return {v, "twisted boson, d = 3 closed form (missing operator before the (1 + beta^2/alpha^2)^{3/2} term read as minus)"};
}

EvalResult twisted_potential(const TwistQuery& q, const SeriesConfig& scfg, const QuadConfig& qcfg,
                             Diagnostics* diag) {
    validate(q);
    switch (q.strategy) {
        case Strategy::Quadrature: return twisted_quadrature(q, qcfg);
        case Strategy::BesselSeries: return twisted_bessel(q, scfg);
        case Strategy::HighTExpansion: {
            HighTPieces p = twisted_highT_pieces(q.m, q.L, q.d, q.omega, scfg);
            if (diag && q.m * q.L >= 1)
                diag->warnings.push_back("twisted_highT: mL = " + std::to_string(q.m * q.L) +
                                         " is outside the expansion's accuracy range (mL < 1)");
            EvalResult out;
            out.strategy = Strategy::HighTExpansion;
            out.pole_residual = p.total.pole;
            out.value = assert_finite(p.total, 1e-10);
            out.terms_used = int(p.terms.size()) - 2;
            out.abs_err_est = std::fabs(p.terms.back().finite);
            return out;
        }
        case Strategy::ClosedForm: {
            if (q.d != 3) throw DomainError("the twisted closed form exists only for d = 3");
            EvalResult out;
            out.strategy = Strategy::ClosedForm;
            out.value = kHalf * twisted_closed_d3(q.m, q.L, q.omega).value;
            return out;
        }
    }
    throw DomainError("unknown strategy");
}

double scherk_schwarz_potential(double M, double R, int d, double qB, double qF, Strategy strategy,
                                const SeriesConfig& scfg, const QuadConfig& qcfg) {
    if (!(R > 0)) throw DomainError("scherk_schwarz_potential: R must be positive");
    if (qB == qF) return 0.0;
    const double L = 2 * kPi * R;
    TwistQuery b{M, L, d, qB, strategy}, f{M, L, d, qF, strategy};
    return L * (twisted_potential(b, scfg, qcfg).value - twisted_potential(f, scfg, qcfg).value);
}

double ss_mass_correction(const std::function<double(double)>& mass_profile, double phi0, double h, double R,
                          double qB, double qF, int d, Strategy strategy, const SeriesConfig& scfg,
                          Diagnostics* diag) {
    if (h <= 0) h = 1e-3 * std::max(1.0, std::fabs(phi0));
    auto V = [&](double phi) {
        double M2 = mass_profile(phi);
        if (!(M2 >= 0)) throw DomainError("ss_mass_correction: mass profile returned a negative M^2");
        return scherk_schwarz_potential(std::sqrt(M2), R, d, qB, qF, strategy, scfg);
    };
    const double v0 = V(phi0);
    auto D = [&](double s) { return (V(phi0 + s) - 2 * v0 + V(phi0 - s)) / (s * s); };
    const double d1 = D(h), d2 = D(h / 2);
    // first-order Richardson: M = sqrt(M^2) brings |phi|^3 terms, so the error starts at O(h)
    const double r = 2 * d2 - d1;
    const double tol = 1e-4;
    if (diag && std::fabs(d1 - d2) > 10 * tol * std::max(std::fabs(r), 1e-300))
        diag->warnings.push_back("ss_mass_correction: Richardson levels disagree; step size may be degenerate");
    return r;
}

}  // namespace effpot
