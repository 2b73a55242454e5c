#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>

#include "effpot/compact.hpp"
#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"
#include "effpot/twisted.hpp"

using namespace effpot;
using doctest::Approx;

namespace {

double rel(double x, double y) { return std::fabs(x - y) / std::fabs(y); }

// -(1/2) 4 (4 pi)^{-nu} sum_q cos(beta q) m^{2nu} K_nu(mLq) (2/(mLq))^nu, with Boost's K
double boost_series(double m, double L, int d, double omega) {
    double nu = (d + 1) / 2.0, a = m * L, sum = 0;
    for (int q = 1; a * q < 700; ++q)
        sum += std::cos(2 * kPi * omega * q) * std::pow(m, 2 * nu) * boost::math::cyl_bessel_k(nu, a * q) *
               std::pow(2 / (a * q), nu);
    return -2 * std::pow(4 * kPi, -nu) * sum;
}

}  // namespace

TEST_CASE("reductions to the compact cases") {
    for (int d : {2, 3, 4})
        for (double mL : {0.0, 0.3, 1.0, 3.0})
            for (Strategy st : {Strategy::Quadrature, Strategy::BesselSeries}) {
                double p = compact_potential({Boundary::Periodic, mL, 1, d, st}).value;
                double a = compact_potential({Boundary::Antiperiodic, mL, 1, d, st}).value;
                CHECK(rel(twisted_potential({mL, 1, d, 0.0, st}).value, p) < 1e-10);
                CHECK(rel(twisted_potential({mL, 1, d, 0.5, st}).value, a) < 1e-10);
            }
    // high-T assembly at omega = 1/2 against the antiperiodic expansion
    CHECK(rel(twisted_highT({0.5, 1, 3, 0.5}).finite,
              compact_potential({Boundary::Antiperiodic, 0.5, 1, 3, Strategy::HighTExpansion}).value) < 1e-12);
}

TEST_CASE("bessel series against quadrature and an independent K") {
    for (double om : {0.1, 0.25, 1.0 / 3, 0.4})
        for (double mL : {0.3, 1.0, 3.0})
            for (int d : {2, 3}) {
                TwistQuery q{mL, 1, d, om};
                double b = twisted_bessel(q).value;
                CHECK(rel(b, twisted_quadrature(q).value) < 1e-8);
                CHECK(rel(b, boost_series(mL, 1, d, om)) < 1e-10);
            }
    // regression anchor of the oracle
    CHECK(twisted_quadrature({1, 1, 3, 0.25}).value == Approx(0.0031610513062913909).epsilon(1e-12));
    // massless: the polylog limit
    CHECK(rel(twisted_bessel({0, 1, 3, 0.25}).value, twisted_quadrature({0, 1, 3, 0.25}).value) < 1e-10);
}

TEST_CASE("periodicity and reflection") {
    CHECK(rel(twisted_bessel({1, 1, 3, 0.999}).value, twisted_bessel({1, 1, 3, -0.001 + 1}).value) < 1e-12);
    CHECK_THROWS_AS(twisted_bessel({1, 1, 3, 1.0}), DomainError);
    CHECK_THROWS_AS(twisted_bessel({1, 1, 3, -0.1}), DomainError);
    for (double om : {0.1, 0.25, 0.4})
        for (Strategy st : {Strategy::Quadrature, Strategy::BesselSeries})
            CHECK(rel(twisted_potential({1, 1, 3, 1 - om, st}).value, twisted_potential({1, 1, 3, om, st}).value) <
                  1e-12);
}

TEST_CASE("phased poisson") {
    for (double lam : {0.1, 0.5, 1.0, 10.0})
        for (double beta : {0.0, kPi / 3, kPi}) {
            auto [l, r] = phased_poisson(lam, beta);
            double scale = phased_poisson(lam, 0).first.real();
            CHECK(std::abs(l - r) < 1e-12 * scale);
            CHECK(l.imag() == 0);
        }
    auto [l, r] = phased_poisson(0.5, kPi / 3);
    CHECK(std::abs(l - r) < 1e-12);
    CHECK_THROWS_AS(phased_poisson(0, 1), DomainError);
}

TEST_CASE("high-temperature assembly") {
    CHECK(rel(twisted_highT({1, 0.3, 3, 0.25}).finite, twisted_quadrature({1, 0.3, 3, 0.25}).value) < 1e-3);
    for (int d : {2, 3, 4})
        for (double om : {0.1, 0.25, 0.4})
            for (double mL : {0.1, 0.5, 0.9}) {
                TwistQuery q{mL, 1, d, om};
                CHECK(rel(twisted_highT(q).finite, twisted_quadrature(q).value) < 1e-8);
            }
    for (double m : {0.1, 1.0, 10.0})
        for (double iL : {1.0, 5.0})
            for (double om : {0.1, 0.25, 0.4}) {
                LaurentValue v = twisted_highT({m, 1 / iL, 3, om});
                CHECK(std::fabs(v.pole) < 1e-12 * std::fabs(v.finite));
            }
    CHECK_THROWS_AS(twisted_highT({1, 1, 3, 0.0}), DomainError);
    Diagnostics diag;
    twisted_highT({2, 1, 3, 0.25}, {}, &diag);
    CHECK(diag.warnings.size() == 1);
}

TEST_CASE("printed d = 3 closed form") {
    // at omega = 1/4 the cos(beta) term drops and m^4 (beta/alpha)^3 / (6 pi alpha) survives m -> 0
    CHECK(twisted_closed_d3(1e-3, 1, 0.25).value == Approx(-kPi * kPi / 48).epsilon(1e-5));
    // the printed form breaks omega -> 1 - omega; the oracle does not
    double a = twisted_closed_d3(1, 0.5, 0.3).value, b = twisted_closed_d3(1, 0.5, 0.7).value;
    CHECK(rel(a, b) > 1e-3);
    CHECK(rel(twisted_quadrature({1, 0.5, 3, 0.3}).value, twisted_quadrature({1, 0.5, 3, 0.7}).value) < 1e-12);
    CHECK(twisted_potential({1, 0.5, 3, 0.3, Strategy::ClosedForm}).value == 0.5 * a);
    CHECK_THROWS_AS(twisted_closed_d3(1, 1, 0), DomainError);
}

TEST_CASE("scherk-schwarz") {
    CHECK(scherk_schwarz_potential(1, 1, 4, 0.3, 0.3) == 0);
    double v = scherk_schwarz_potential(0, 1, 4, 0, 0.5);
    const double L = 2 * kPi;
    double oracle = L * (twisted_quadrature({0, L, 4, 0}).value - twisted_quadrature({0, L, 4, 0.5}).value);
    CHECK(rel(v, oracle) < 1e-10);
    CHECK(v < 0);
    CHECK(rel(scherk_schwarz_potential(0.7, 1.3, 3, 0.5, 0.1), -scherk_schwarz_potential(0.7, 1.3, 3, 0.1, 0.5)) <
          1e-15);
    CHECK(rel(scherk_schwarz_potential(0.7, 1.3, 3, 0, 0.5, Strategy::Quadrature),
              scherk_schwarz_potential(0.7, 1.3, 3, 0, 0.5)) < 1e-9);
}

TEST_CASE("scherk-schwarz mass correction") {
    auto constant = [](double) { return 0.49; };
    CHECK(std::fabs(ss_mass_correction(constant, 0.3, 1e-2, 1, 0, 0.5, 4)) < 1e-10);

    // M^2 = phi^2 at 0: 2 dV/dM^2 at M^2 = 0, from a one-sided difference in M^2
    auto sq = [](double p) { return p * p; };
    double mc = ss_mass_correction(sq, 0, 0, 1, 0, 0.5, 4);
    double h = 1e-5;
    auto V = [](double M2) { return scherk_schwarz_potential(std::sqrt(M2), 1, 4, 0, 0.5); };
    double dV = (-3 * V(0) + 4 * V(h) - V(2 * h)) / (2 * h);
    CHECK(rel(mc, 2 * dV) < 1e-4);

    // linear in lambda for M^2 = lambda phi^2 / 2
    auto p1 = [](double p) { return 0.5 * p * p; };
    auto p2 = [](double p) { return p * p; };
    CHECK(ss_mass_correction(p2, 0, 0, 1, 0, 0.5, 4) / ss_mass_correction(p1, 0, 0, 1, 0, 0.5, 4) ==
          Approx(2).epsilon(1e-4));

    auto bad = [](double) { return -1.0; };
    CHECK_THROWS_AS(ss_mass_correction(bad, 0, 0, 1, 0, 0.5, 4), DomainError);
}
