#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"
#include "effpot/thermal.hpp"
#include "effpot/twisted.hpp"

using namespace effpot;
using doctest::Approx;

namespace {

double rel(double x, double y) { return std::fabs(x - y) / std::fabs(y); }

// independent integrator on the plain k variable
double boost_oracle(Statistics s, double m, double T, int d) {
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [&](double k) {
        double e = std::exp(-std::sqrt(k * k + m * m) / T);
        double l = s == Statistics::Boson ? std::log1p(-e) : std::log1p(e);
        return e == 0 ? 0.0 : std::pow(k, d - 1) * l;
    };
    double Sd = 2 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0);
    return 2 * T * Sd / std::pow(2 * kPi, d) * es.integrate(f, 1e-14);
}

// Bessel series with Boost's K
double boost_bessel_series(Statistics s, double m, double T, int d) {
    double nu = (d + 1) / 2.0, a = m / T, sum = 0;
    for (int q = 1; q < 400; ++q) {
        double t = std::pow(m, 2 * nu) * boost::math::cyl_bessel_k(nu, a * q) * std::pow(2 / (a * q), nu);
        if (s == Statistics::Fermion && (q % 2)) t = -t;
        sum += t;
        if (a * q > 700) break;
    }
    return -4 * std::pow(4 * kPi, -nu) * sum;
}

}  // namespace

TEST_CASE("matsubara partial fractions") {
    CHECK(matsubara_partial_fraction(Statistics::Boson, 1, 1, 100000) ==
          Approx(1 / std::tanh(0.5) / 2).epsilon(1e-5));
    CHECK(matsubara_partial_fraction(Statistics::Fermion, 2, 1, 100000) == Approx(std::tanh(1.0) / 4).epsilon(1e-5));
    CHECK(matsubara_partial_fraction(Statistics::Boson, 60, 1, 200000) == Approx(1 / 120.0).epsilon(1e-4));
    CHECK_THROWS_AS(matsubara_partial_fraction(Statistics::Boson, 0, 1, 10), DomainError);
}

TEST_CASE("log-sum identity") {
    CHECK(log_sum_identity(Statistics::Boson, 50, 1) == Approx(50 - 2 * std::log(2.0)).epsilon(1e-15));
    CHECK(std::fabs(log_sum_identity(Statistics::Fermion, 0, 1)) < 1e-15);
    // d/d(a^2) reproduces the full Matsubara sum coth(a/2T)/(2aT)
    for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
        const double h = 1e-5, a2 = 1;
        double fd = (log_sum_identity(s, std::sqrt(a2 + h), 1) - log_sum_identity(s, std::sqrt(a2 - h), 1)) / (2 * h);
        double exact = s == Statistics::Boson ? 1 / std::tanh(0.5) / 2 : std::tanh(0.5) / 2;
        CHECK(fd == Approx(exact).epsilon(1e-6));
        CHECK(matsubara_partial_fraction(s, 1, 1, 200000) == Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("quadrature: massless values and the independent integrator") {
    const double pi2 = kPi * kPi;
    for (double T : {0.5, 1.0, 3.0}) {
        CHECK(thermal_quadrature({Statistics::Boson, 0, T, 3}).value ==
              Approx(-pi2 * std::pow(T, 4) / 45).epsilon(1e-12));
        CHECK(thermal_quadrature({Statistics::Fermion, 0, T, 3}).value ==
              Approx(7 * pi2 * std::pow(T, 4) / 360).epsilon(1e-12));
    }
    // q-series: -2 Gamma(nu) T^{2nu} pi^{-nu} zeta(2 nu) for every d
    for (int d : {2, 3, 4, 5}) {
        double nu = (d + 1) / 2.0;
        double v = -2 * std::tgamma(nu) * std::pow(kPi, -nu) * riemann_zeta(2 * nu);
        CHECK(rel(thermal_quadrature({Statistics::Boson, 0, 1, d}).value, v) < 1e-12);
        CHECK(rel(thermal_quadrature({Statistics::Fermion, 0, 1, d}).value, -(1 - std::pow(2.0, 1 - 2 * nu)) * v) < 1e-12);
    }
    for (int d : {2, 3, 4})
        for (Statistics s : {Statistics::Boson, Statistics::Fermion})
            for (double a : {0.1, 1.0, 5.0})
                CHECK(rel(thermal_quadrature({s, a, 1, d}).value, boost_oracle(s, a, 1, d)) < 1e-10);
    CHECK(thermal_quadrature({Statistics::Boson, 1, 1, 3}).abs_err_est >= 0);
}

TEST_CASE("bessel series") {
    for (int d : {2, 3, 4})
        for (Statistics s : {Statistics::Boson, Statistics::Fermion})
            for (double a : {0.1, 0.25, 0.5, 0.8, 1.0, 2.0, 5.0}) {
                PotentialQuery q{s, a, 1, d};
                EvalResult b = thermal_bessel(q);
                CHECK(rel(b.value, thermal_quadrature(q).value) < 1e-8);
                CHECK(rel(b.value, boost_bessel_series(s, a, 1, d)) < 1e-10);
                CHECK(b.pole_residual == 0);
                CHECK(b.terms_used > 0);
            }
    // m/T = 5: one term carries all but ~e^{-5}
    {
        double one = -4 * std::pow(4 * kPi, -2.0) * std::pow(5.0, 4) * boost::math::cyl_bessel_k(2, 5.0) *
                     std::pow(2 / 5.0, 2);
        CHECK(rel(thermal_bessel({Statistics::Boson, 5, 1, 3}).value, one) < std::exp(-5.0));
    }
    // massless limit routes to the zeta values
    CHECK(rel(thermal_bessel({Statistics::Boson, 0, 1, 3}).value, -kPi * kPi / 45) < 1e-14);
    auto ps = thermal_bessel_partial_sums({Statistics::Fermion, 1, 1, 3});
    REQUIRE(ps.size() > 3);
    CHECK((ps[1].second - ps[0].second) * (ps[2].second - ps[1].second) < 0);
}

TEST_CASE("fermion doubling identity") {
    for (int d : {2, 3, 4})
        for (double a : {0.3, 1.0, 3.0}) {
            auto f = thermal_bessel_partial_sums({Statistics::Fermion, a, 1, d});
            auto b1 = thermal_bessel_partial_sums({Statistics::Boson, a, 1, d});
            auto b2 = thermal_bessel_partial_sums({Statistics::Boson, a, 0.5, d});
            size_t n = std::min({f.size() / 2, b1.size() / 2, b2.size()});
            REQUIRE(n > 2);
            for (size_t k = 1; k <= n; ++k)
                CHECK(rel(2 * b2[k - 1].second - b1[2 * k - 1].second, f[2 * k - 1].second) < 1e-12);
        }
}

TEST_CASE("high-temperature expansion") {
    for (double a : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9})
        for (int d : {3, 4}) {
            PotentialQuery q{Statistics::Boson, a, 1, d};
            CHECK(rel(thermal_highT(q).finite, thermal_quadrature(q).value) < 1e-3);
        }
    for (double a : {0.1, 0.5, 0.9})
        for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
            PotentialQuery q{s, a, 1, 2};
            CHECK(rel(thermal_highT(q).finite, thermal_quadrature(q).value) < 1e-8);
        }
    // d = 2 boson: -(T^3/pi)[Li_3(e^{-a}) + a Li_2(e^{-a})]
    {
        double a = 0.4, e = std::exp(-a), li3 = 0, li2 = 0;
        for (int k = 1; k < 200; ++k) {
            li3 += std::pow(e, k) / (double(k) * k * k);
            li2 += std::pow(e, k) / (double(k) * k);
        }
        CHECK(rel(thermal_highT({Statistics::Boson, a, 1, 2}).finite, -(li3 + a * li2) / kPi) < 1e-12);
    }
    // massless limit of the expansion is the zeta value alone
    CHECK(rel(thermal_highT({Statistics::Boson, 0, 1, 3}).finite, -kPi * kPi / 45) < 1e-14);

    Diagnostics diag;
    thermal_highT({Statistics::Boson, 1.5, 1, 3}, {}, &diag);
    CHECK(diag.warnings.size() == 1);

    EvalResult r = thermal_potential({Statistics::Boson, 0.5, 1, 3, Strategy::HighTExpansion});
    CHECK(r.terms_used == 9);
    CHECK(r.abs_err_est > 0);
    CHECK(r.abs_err_est < 1e-6 * std::fabs(r.value));
}

TEST_CASE("closed forms are literal transcriptions") {
    const double pi2 = kPi * kPi;
    CHECK(thermal_closed_d3_boson(0, 1).value == Approx(-pi2 / 45).epsilon(1e-14));
    CHECK(thermal_closed_d3_fermion(0, 1).value == Approx(14 * pi2 / 45).epsilon(1e-14));
    // d = 3 boson tracks the oracle in its validity region
    for (double a : {0.1, 0.3, 0.5})
        CHECK(rel(thermal_closed_d3_boson(a, 1).value, thermal_quadrature({Statistics::Boson, a, 1, 3}).value) < 1e-4);
    // d = 2 boson, m = 1, T = 1: m^3/(6 sqrt2 pi) + ... + 2 sqrt2 pi T^3 zeta'(-2)
    {
        const double r2 = std::sqrt(2.0);
        double expect = 1 / (6 * r2 * kPi) + 1 / (4 * r2 * kPi) + std::log(2.0) / (2 * r2 * kPi) +
                        std::log(kPi) / (2 * r2 * kPi) - std::log(2 * kPi) / (2 * r2 * kPi) +
                        2 * r2 * kPi * riemann_zeta_deriv(-2);
        CHECK(thermal_closed_d2_boson(1, 1).value == Approx(expect).epsilon(1e-14));
    }
    CHECK(thermal_closed_d2_fermion(1, 2).value ==
          Approx(1 / (6 * std::sqrt(2.0) * kPi) - 2 * std::log(2.0) / (std::sqrt(2.0) * kPi) -
                 12 * std::sqrt(2.0) * kPi * 8 * riemann_zeta_deriv(-2))
              .epsilon(1e-14));
    CHECK(riemann_zeta_deriv(-2) == Approx(-riemann_zeta(3) / (4 * pi2)).epsilon(1e-14));
    CHECK(thermal_closed_d3_boson(1, 1).provenance != nullptr);
}

TEST_CASE("J_B integral") {
    CHECK(jb_integral(0) == Approx(-std::pow(kPi, 4) / 45).epsilon(1e-12));
    CHECK(jb_integral(1e4) < 0);
    CHECK(std::fabs(jb_integral(1e4)) < 1e-40);
    CHECK(rel(std::pow(1.0, 4) * jb_integral(1) / (kPi * kPi), thermal_quadrature({Statistics::Boson, 1, 1, 3}).value) < 1e-8);
    CHECK(rel(std::pow(2.0, 4) * jb_integral(0.25) / (kPi * kPi), thermal_quadrature({Statistics::Boson, 1, 2, 3}).value) < 1e-8);
}

TEST_CASE("dispatcher, validation and monotonicity") {
    CHECK_THROWS_AS(thermal_potential({Statistics::Boson, 1, 1, 7}), DomainError);
    CHECK_THROWS_AS(thermal_potential({Statistics::Boson, -1, 1, 3}), DomainError);
    CHECK_THROWS_AS(thermal_potential({Statistics::Boson, 1, 0, 3}), DomainError);
    CHECK_THROWS_AS(thermal_potential({Statistics::Boson, 1, 1, 4, Strategy::ClosedForm}), DomainError);
    CHECK(thermal_potential({Statistics::Fermion, 1, 2, 2, Strategy::ClosedForm}).value ==
          thermal_closed_d2_fermion(1, 2).value);
    double prev = HUGE_VAL;
    for (double a : {0.1, 0.25, 0.5, 0.8, 1.0, 2.0, 5.0}) {
        double v = thermal_quadrature({Statistics::Boson, a, 1, 3}).value;
        CHECK(v < 0);
        CHECK(std::fabs(v) < prev);
        prev = std::fabs(v);
    }
    for (double lam : {0.1, 1.0, 10.0}) {
        auto [l, r] = phased_poisson(lam, 0);
        CHECK(std::abs(l - r) < 1e-12 * std::abs(r));
    }
}
