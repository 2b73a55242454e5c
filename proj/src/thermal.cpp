#include "effpot/thermal.hpp"

#include <cmath>
#include <string>

#include "effpot/detail/dimreg.hpp"
#include "effpot/detail/kahan.hpp"
#include "effpot/errors.hpp"
#include "effpot/quadrature.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

namespace {

double solid_angle(int d) { return 2 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0); }

// x * ln(y) with the x = 0 limit taken as 0 (massless limits of m^4 ln m^2 terms)
double xlog(double x, double y) { return x == 0 ? 0.0 : x * std::log(y); }

struct BesselSums {
    double value = 0;
    double last = 0;
    int terms = 0;
};

// sum_q w_q m^{2 nu} K_nu(a q) / (a q / 2)^nu
BesselSums bessel_sum(double m, double a, double nu, bool alternate, const SeriesConfig& cfg,
                      std::vector<std::pair<int, double>>* partial = nullptr, double scale = 1) {
    detail::KahanSum sum;
    // the q^{-2 nu} stretch before the exponential sets in needs a margin
    detail::Truncation stop(cfg.rel_tol * 1e-2);
    const double m2nu = std::pow(m, 2 * nu);
    BesselSums out;
    for (int q = 1; q <= cfg.max_terms; ++q) {
        double z = a * q;
        double t = m2nu * bessel_k(nu, z) * std::pow(2 / z, nu);
        if (alternate && (q % 2)) t = -t;
        sum += t;
        out.last = t;
        out.terms = q;
        if (partial) partial->push_back({q, scale * sum.value()});
        if (stop.done(t, sum.value())) {
            out.value = sum.value();
            return out;
        }
    }
    throw ConvergenceError("thermal_bessel: series did not converge within max_terms");
}

double prefactor(double nu) { return -4 * std::pow(4 * kPi, -nu); }

detail::Factor zeta_factor(double s0) {
    // zeta(s0 - eps)
    if (s0 == 1) return {true, {-1.0, kEulerGamma}, {}};
    double slope = s0 <= 0 ? -riemann_zeta_deriv(s0) : detail::unknown_slope();
    return detail::regular(riemann_zeta(s0), slope);
}

}  // namespace

void validate(const PotentialQuery& q) {
    if (!(q.m >= 0)) throw DomainError("mass must be non-negative");
    if (!(q.T > 0)) throw DomainError("temperature must be positive");
    if (q.d < 2 || q.d > 5) throw DomainError("spatial dimension must be 2, 3, 4 or 5");
}

double matsubara_partial_fraction(Statistics s, double a, double T, long n_max) {
    if (!(a > 0) || !(T > 0)) throw DomainError("matsubara_partial_fraction: a and T must be positive");
    if (n_max < 0) throw DomainError("matsubara_partial_fraction: n_max must be non-negative");
    detail::KahanSum sum;
    const double a2 = a * a;
    for (long n = n_max; n >= -n_max; --n) {
        double w = s == Statistics::Boson ? 2 * kPi * n * T : (2 * n + 1) * kPi * T;
        sum += 1 / (w * w + a2);
    }
    return sum.value();
}

double log_sum_identity(Statistics s, double a, double T) {
    if (!(a >= 0) || !(T > 0)) throw DomainError("log_sum_identity: need a >= 0, T > 0");
    double x = a / T;
    double e = std::exp(-x);
    double l = s == Statistics::Boson ? std::log1p(-e) : std::log1p(e);
    return x + 2 * l - 2 * std::log(2.0);
}

EvalResult thermal_quadrature(const PotentialQuery& q, const QuadConfig& cfg) {
    validate(q);
    const double T = q.T, m2 = q.m * q.m;
    const int d = q.d;
    const bool boson = q.statistics == Statistics::Boson;
    auto g = [&](double k) {
        if (k == 0) return 0.0;
        double e = std::exp(-std::sqrt(k * k + m2) / T);
        double l = boson ? std::log1p(-e) : std::log1p(e);
        return std::pow(k, d - 1) * l;
    };
    QuadResult r = integrate_thermal(g, T, cfg);
    const double pref = 2 * T * solid_angle(d) / std::pow(2 * kPi, d);
    EvalResult out;
    out.value = pref * r.value;
    out.abs_err_est = std::fabs(pref) * r.abs_err;
    out.strategy = Strategy::Quadrature;
    return out;
}

EvalResult thermal_bessel(const PotentialQuery& q, const SeriesConfig& cfg) {
    validate(q);
    const double nu = (q.d + 1) / 2.0;
    const bool boson = q.statistics == Statistics::Boson;
    EvalResult out;
    out.strategy = Strategy::BesselSeries;
    if (q.m == 0) {
        // -2 Gamma(nu) T^{2 nu} pi^{-nu} sum_q w_q / q^{2 nu}
        double z = riemann_zeta(2 * nu);
        double c = boson ? z : -(1 - std::pow(2.0, 1 - 2 * nu)) * z;
        out.value = -2 * std::tgamma(nu) * std::pow(q.T, 2 * nu) * std::pow(kPi, -nu) * c;
        return out;
    }
    const double a = q.m / q.T;
    const double C = prefactor(nu);
    if (boson) {
        BesselSums s = bessel_sum(q.m, a, nu, false, cfg);
        out.value = C * s.value;
        out.abs_err_est = 3 * std::fabs(C * s.last);
        out.terms_used = s.terms;
        return out;
    }
    // alternating sum directly, and as 2 f(2a) - f(a) from two boson sums
    BesselSums direct = bessel_sum(q.m, a, nu, true, cfg);
    BesselSums b1 = bessel_sum(q.m, a, nu, false, cfg);
    BesselSums b2 = bessel_sum(q.m, 2 * a, nu, false, cfg);
    double doubled = 2 * b2.value - b1.value;
    out.value = C * direct.value;
    out.abs_err_est = std::fabs(C) * (3 * std::fabs(direct.last) + std::fabs(direct.value - doubled));
    out.terms_used = direct.terms;
    return out;
}

std::vector<std::pair<int, double>> thermal_bessel_partial_sums(const PotentialQuery& q,
                                                                const SeriesConfig& cfg) {
    validate(q);
    if (q.m == 0) throw DomainError("partial sums need m > 0");
    const double nu = (q.d + 1) / 2.0;
    std::vector<std::pair<int, double>> out;
    bessel_sum(q.m, q.m / q.T, nu, q.statistics == Statistics::Fermion, cfg, &out, prefactor(nu));
    return out;
}

HighTPieces thermal_highT_pieces(double m, double T, int d, const SeriesConfig& cfg) {
    validate(PotentialQuery{Statistics::Boson, m, T, d, Strategy::HighTExpansion});
    using detail::Factor;
    using detail::pow_jet;
    const double nu0 = (d + 1) / 2.0;  // nu = nu0 + eps/2
    const double a = m / T;
    const double p = (a / (2 * kPi)) * (a / (2 * kPi));
    const Factor one = detail::regular(1, 0);

    // -4 (4 pi)^{-nu} T^{2 nu}
    const Jet pref = -4 * (pow_jet(4 * kPi, -nu0, -0.5) * pow_jet(T, 2 * nu0, 1));

    HighTPieces out;
    // (sqrt(pi)/2) a^{2nu-1} Gamma(1/2 - nu)
    Jet ra = 0.5 * std::sqrt(kPi) * pow_jet(a, d, 1);
    out.terms.push_back(detail::product(pref * ra, detail::gamma_factor(0.5 - nu0, -0.5), one));
    // -(1/4) a^{2nu} Gamma(-nu)
    Jet rb = -0.25 * pow_jet(a, 2 * nu0, 1);
    out.terms.push_back(detail::product(pref * rb, detail::gamma_factor(-nu0, -0.5), one));

    // sqrt(pi) (2 pi)^{2nu-1} (-1)^l Gamma(1/2 - nu + l) / l! p^l zeta(1 - 2nu + 2l)
    const bool odd = d % 2;
    const int n_even = d / 2;
    const Jet two_pi = std::sqrt(kPi) * pow_jet(2 * kPi, d, 1);
    detail::Truncation stop(cfg.rel_tol * 1e-3);
    double coef = 1;  // (-1)^l p^l / l!
    for (int l = 0; l <= cfg.max_terms; ++l) {
        if (l > 0) coef *= -p / l;
        if (odd && l > cfg.sigma) break;
        LaurentValue t =
            detail::product(pref * (coef * two_pi), detail::gamma_factor(0.5 - nu0 + l, -0.5),
                            zeta_factor(2.0 * l - d));
        out.terms.push_back(t);
        // d even: past l = d/2 every term is regular; keep going until they are negligible
        if (!odd && l > n_even && l >= cfg.sigma) {
            double scale = 0;
            for (auto& x : out.terms) scale += x.finite;
            if (stop.done(t.finite, scale) || coef == 0) break;
        }
    }
    for (auto& x : out.terms) out.total += x;
    return out;
}

LaurentValue thermal_highT(const PotentialQuery& q, const SeriesConfig& cfg, Diagnostics* diag) {
    validate(q);
    if (diag && q.m / q.T >= 1)
        diag->warnings.push_back("thermal_highT: m/T = " + std::to_string(q.m / q.T) +
                                 " is outside the expansion's accuracy range (m/T < 1)");
    if (q.statistics == Statistics::Boson) return thermal_highT_pieces(q.m, q.T, q.d, cfg).total;
    LaurentValue half = thermal_highT_pieces(q.m, q.T / 2, q.d, cfg).total;
    LaurentValue full = thermal_highT_pieces(q.m, q.T, q.d, cfg).total;
    return 2 * half - full;
}

// ---- printed closed forms -------------------------------------------------

Transcription thermal_closed_d3_boson(double m, double T) {
    if (!(m >= 0) || !(T > 0)) throw DomainError("closed form: need m >= 0, T > 0");
    const double pi2 = kPi * kPi, g = kEulerGamma, a = m / T, m4 = std::pow(m, 4);
    double v = 3 * m4 / (64 * pi2) - g * m4 / (32 * pi2) - m * m * m * T / (6 * kPi) -
               g * m4 / (16 * pi2) + m * m * T * T / 12 - pi2 * std::pow(T, 4) / 45 +
               m4 * std::log(2.0) / (16 * pi2) + m4 * std::log(kPi) / (16 * pi2) -
               xlog(m4, a * a) / (32 * pi2) - m4 * digamma(-1.5) / (32 * pi2) -
               m4 * digamma(0.5) / (32 * pi2) + m4 * digamma(2.5) / (32 * pi2);
    // the sigma = 8 tail, printed with an extra factor m/T on every term
    v += -std::pow(m, 7) * a * riemann_zeta(5) / (4096 * std::pow(kPi, 6) * std::pow(T, 3)) +
         std::pow(m, 9) * a * riemann_zeta(7) / (32768 * std::pow(kPi, 8) * std::pow(T, 5)) -
         7 * std::pow(m, 11) * a * riemann_zeta(9) / (1572864 * std::pow(kPi, 10) * std::pow(T, 7)) +
         3 * std::pow(m, 13) * a * riemann_zeta(11) / (4194304 * std::pow(kPi, 12) * std::pow(T, 9)) -
         33 * std::pow(m, 15) * a * riemann_zeta(13) / (268435456 * std::pow(kPi, 14) * std::pow(T, 11));
    return {v, "boson, d = 3, high-temperature closed form with its sigma = 8 tail"};
}

Transcription thermal_closed_d3_fermion(double m, double T) {
    if (!(m >= 0) || !(T > 0)) throw DomainError("closed form: need m >= 0, T > 0");
    const double pi2 = kPi * kPi, g = kEulerGamma, m4 = std::pow(m, 4);
    double v = 3 * m4 / (64 * pi2) - 3 * g * m4 / (32 * pi2) - m * m * T * T / 6 +
               14 * pi2 * std::pow(T, 4) / 45 + m4 * std::log(kPi) / (16 * pi2) -
               xlog(m4, m * m / (T * T)) / (32 * pi2) - m4 * digamma(-1.5) / (32 * pi2) -
               m4 * digamma(0.5) / (32 * pi2) + m4 * digamma(2.5) / (32 * pi2) +
               7 * std::pow(m, 6) * riemann_zeta(3) / (1536 * pi2 * pi2 * T * T) -
               31 * std::pow(m, 8) * riemann_zeta(5) / (65536 * std::pow(kPi, 6) * std::pow(T, 4));
    return {v, "fermion, d = 3, high-temperature closed form (massless term printed as +14 pi^2 T^4/45)"};
}

Transcription thermal_closed_d2_boson(double m, double T) {
    if (!(m >= 0) || !(T > 0)) throw DomainError("closed form: need m >= 0, T > 0");
    const double r = std::sqrt(2.0), m2 = m * m;
    double v = m * m2 / (6 * r * kPi) + m2 * T / (4 * r * kPi) + m2 * T * std::log(2.0) / (2 * r * kPi) +
               m2 * T * std::log(kPi) / (2 * r * kPi) - m2 * T * std::log(2 * kPi) / (2 * r * kPi) -
               xlog(m2, m2 / (T * T)) * T / (4 * r * kPi) +
               2 * r * kPi * T * T * T * riemann_zeta_deriv(-2);
    return {v, "boson, d = 2, finite closed form with the zeta'(-2) term"};
}

Transcription thermal_closed_d2_fermion(double m, double T) {
    if (!(m >= 0) || !(T > 0)) throw DomainError("closed form: need m >= 0, T > 0");
    const double r = std::sqrt(2.0), m2 = m * m;
    double v = m * m2 / (6 * r * kPi) - m2 * T * std::log(2.0) / (r * kPi) -
               12 * r * kPi * T * T * T * riemann_zeta_deriv(-2);
    return {v, "fermion, d = 2, finite closed form"};
}

double jb_integral(double y, const QuadConfig& cfg) {
    if (!(y >= 0)) throw DomainError("jb_integral: y must be non-negative");
    auto g = [&](double x) {
        if (x == 0) return 0.0;
        return x * x * std::log1p(-std::exp(-std::sqrt(x * x + y)));
    };
    return integrate_thermal(g, 1.0, cfg).value;
}

EvalResult thermal_potential(const PotentialQuery& q, const SeriesConfig& scfg, const QuadConfig& qcfg,
                             Diagnostics* diag) {
    validate(q);
    switch (q.strategy) {
        case Strategy::Quadrature: return thermal_quadrature(q, qcfg);
        case Strategy::BesselSeries: return thermal_bessel(q, scfg);
        case Strategy::HighTExpansion: {
            LaurentValue v = thermal_highT(q, scfg, diag);
            EvalResult out;
            out.strategy = Strategy::HighTExpansion;
            out.pole_residual = v.pole;
            out.value = assert_finite(v, 1e-10);
            // the last series term stands in for the truncation error
            HighTPieces pc = thermal_highT_pieces(q.m, q.T, q.d, scfg);
            out.terms_used = int(pc.terms.size()) - 2;
            out.abs_err_est = std::fabs(pc.terms.back().finite);
            if (q.statistics == Statistics::Fermion) out.abs_err_est *= 3;
            return out;
        }
        case Strategy::ClosedForm: {
            Transcription t{0, nullptr};
            bool boson = q.statistics == Statistics::Boson;
            if (q.d == 3)
                t = boson ? thermal_closed_d3_boson(q.m, q.T) : thermal_closed_d3_fermion(q.m, q.T);
            else if (q.d == 2)
                t = boson ? thermal_closed_d2_boson(q.m, q.T) : thermal_closed_d2_fermion(q.m, q.T);
            else
                throw DomainError("closed forms exist only for d = 2 and d = 3");
            EvalResult out;
            out.strategy = Strategy::ClosedForm;
            out.value = t.value;
            return out;
        }
    }
    throw DomainError("unknown strategy");
}

}  // namespace effpot
