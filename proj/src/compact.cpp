#include "effpot/compact.hpp"

#include <cmath>

#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"

namespace effpot {

namespace {

double xlog(double x, double y) { return x == 0 ? 0.0 : x * std::log(y); }

void check(double m, double L) {
    if (!(m >= 0)) throw DomainError("mass must be non-negative");
    if (!(L > 0)) throw DomainError("circumference must be positive");
}

}  // namespace

PotentialQuery thermal_counterpart(const CompactQuery& q) {
    check(q.m, q.L);
    Statistics s = q.bc == Boundary::Periodic ? Statistics::Boson : Statistics::Fermion;
    return {s, q.m, 1 / q.L, q.d, q.strategy};
}

EvalResult compact_potential(const CompactQuery& q, const SeriesConfig& scfg, const QuadConfig& qcfg,
                             Diagnostics* diag) {
    PotentialQuery t = thermal_counterpart(q);
    if (q.strategy == Strategy::ClosedForm) {
        Transcription c = q.d == 3   ? compact_closed_d3(q.bc, q.m, q.L)
                          : q.d == 2 ? compact_closed_d2(q.bc, q.m, q.L)
                                     : throw DomainError("closed forms exist only for d = 2 and d = 3");
        EvalResult out;
        out.strategy = Strategy::ClosedForm;
        out.value = kCompactNormalization * c.value;
        return out;
    }
    EvalResult r = thermal_potential(t, scfg, qcfg, diag);
    r.value *= kCompactNormalization;
    r.abs_err_est *= kCompactNormalization;
    r.pole_residual *= kCompactNormalization;
    return r;
}

Transcription compact_closed_d3(Boundary bc, double m, double L) {
    check(m, L);
    const double pi2 = kPi * kPi, g = kEulerGamma, m4 = std::pow(m, 4), L4 = std::pow(L, 4);
    const double psis = -m4 * digamma(-1.5) / (32 * pi2) - m4 * digamma(0.5) / (32 * pi2) +
                        m4 * digamma(2.5) / (32 * pi2);
    if (bc == Boundary::Periodic) {
        double v = m * m / (12 * L * L) + 3 * m4 / (64 * pi2) - g * m4 / (32 * pi2) - g * m4 / (16 * L * pi2) -
                   m * m * m / (6 * L * kPi) - pi2 / (45 * L4) + m4 * std::log(2.0) / (32 * pi2) +
                   m4 * std::log(2.0) / (32 * L * pi2) - xlog(m4, m) / (16 * pi2) + xlog(m4, m) / (16 * L * pi2) -
                   xlog(m4, L * L * m * m) / (32 * pi2) + m4 * std::log(kPi) / (32 * pi2) +
                   m4 * std::log(kPi) / (32 * L * pi2) + psis +
                   L * L * std::pow(m, 6) * riemann_zeta(3) / (384 * pi2 * pi2) -
                   L4 * std::pow(m, 8) * riemann_zeta(5) / (4096 * pi2 * pi2 * pi2);
        return {v, "periodic, d = 3, small-L closed form (carries terms with a bare 1/L)"};
    }
    double v = -m * m / (6 * L * L) + 3 * m4 / (64 * pi2) - g * m4 / (32 * pi2) - g * m4 / (16 * L * pi2) +
               14 * pi2 / (45 * L4) - xlog(m4, L * L * m * m) / (32 * pi2) + m4 * std::log(kPi) / (16 * pi2) +
               psis + 7 * std::pow(m, 6) * L * L * riemann_zeta(3) / (1536 * pi2 * pi2) -
               31 * L4 * std::pow(m, 8) * riemann_zeta(5) / (65536 * pi2 * pi2 * pi2);
    return {v, "antiperiodic, d = 3, small-L closed form (massless term printed as +14 pi^2/(45 L^4))"};
}

Transcription compact_closed_d2(Boundary bc, double m, double L) {
    check(m, L);
    const double r = std::sqrt(2.0), m2 = m * m, zp = riemann_zeta_deriv(-2);
    if (bc == Boundary::Periodic) {
        double v = m2 / (4 * r * L * kPi) + m * m2 / (6 * r * kPi) + m2 * std::log(2.0) / (2 * r * L * kPi) -
                   xlog(m2, L * L * m2) / (4 * r * L * kPi) + m2 * std::log(kPi) / (2 * r * L * kPi) -
                   m2 * std::log(2 * kPi) / (2 * r * L * kPi) + zp / (L * L * L);
        return {v, "periodic, d = 2, finite closed form"};
    }
    double v = m * m2 / (6 * r * kPi) - m2 * std::log(2.0) / (r * L * kPi) - zp / (L * L * L);
    return {v, "antiperiodic, d = 2, finite closed form"};
}

double topological_mass(Boundary bc, double lambda, double L) {
    if (!(lambda > 0) || !(L > 0)) throw DomainError("topological_mass: need lambda > 0, L > 0");
    return bc == Boundary::Periodic ? lambda / (24 * L * L) : -lambda / (48 * L * L);
}

double topological_mass_fd(Boundary bc, double lambda, double L, int d, double h, Strategy strategy) {
    if (!(lambda > 0) || !(L > 0) || !(h > 0)) throw DomainError("topological_mass_fd: need lambda, L, h > 0");
    auto V = [&](double phi) {
        CompactQuery q{bc, std::sqrt(lambda * phi * phi / 2), L, d, strategy};
        return compact_potential(q).value;
    };
    const double v0 = V(0);
    h /= L * std::sqrt(lambda / 2);
    auto D = [&](double s) { return (V(s) - 2 * v0 + V(-s)) / (s * s); };
    return 2 * D(h / 2) - D(h);
}

double rs_massless_casimir(double r_c) {
    if (!(r_c > 0)) throw DomainError("rs_massless_casimir: r_c must be positive");
    return -3 * riemann_zeta(5) / (64 * std::pow(kPi, 4) * std::pow(r_c, 4));
}

double rs_tower_zeta(double r_c) {
    if (!(r_c > 0)) throw DomainError("rs_tower_zeta: r_c must be positive");
    // sum_n M_n^{4-2s} = 2 (pi/r_c)^{4-2s} zeta(2s-4); Gamma(s-2)/Gamma(s) -> 1/2 at s = 0
    return -kPi * kPi * riemann_zeta_deriv(-4) / (16 * std::pow(r_c, 4));
}

double rs_tower_quadrature(double r_c, const QuadConfig& cfg) {
    if (!(r_c > 0)) throw DomainError("rs_tower_quadrature: r_c must be positive");
    const double L = 2 * r_c;
    PotentialQuery q{Statistics::Boson, 0.0, 1 / L, 4, Strategy::Quadrature};
    return 0.5 * L * thermal_quadrature(q, cfg).value;
}

}  // namespace effpot
