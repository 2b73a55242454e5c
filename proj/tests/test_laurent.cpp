#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

#include "effpot/errors.hpp"
#include "effpot/laurent.hpp"
#include "effpot/specfun.hpp"
#include "effpot/thermal.hpp"
#include "effpot/twisted.hpp"

using namespace effpot;
using doctest::Approx;

namespace {

// pole and finite part of f(delta) = p/delta + f0 + f1 delta, from delta f at two steps
// with one Richardson step on the finite part
LaurentValue fit(double (*f)(double), double h) {
    auto g = [&](double d) { return d * f(d); };  // p + f0 d + f1 d^2
    double p1 = g(h), p2 = g(-h);
    double pole = (p1 + p2) / 2;  // even part: p + f1 h^2
    double fin1 = (p1 - p2) / (2 * h);
    double q1 = g(h / 2), q2 = g(-h / 2);
    double fin2 = (q1 - q2) / h;
    double pole2 = (q1 + q2) / 2;
    return {(4 * pole2 - pole) / 3, (4 * fin2 - fin1) / 3};
}

double gamma_m0(double d) { return boost::math::tgamma(d); }
double gamma_m1(double d) { return boost::math::tgamma(-1 + d); }
double gamma_m2(double d) { return boost::math::tgamma(-2 + d); }
double gamma_m3(double d) { return boost::math::tgamma(-3 + d); }
double zeta_1(double d) { return boost::math::zeta(1 + d); }

}  // namespace

TEST_CASE("gamma_laurent matches the numerical expansion of Gamma(-n + delta)") {
    CHECK(gamma_laurent(0).pole == 1);
    CHECK(gamma_laurent(0).finite == Approx(-kEulerGamma).epsilon(1e-15));
    CHECK(gamma_laurent(1).pole == -1);
    CHECK(gamma_laurent(1).finite == Approx(kEulerGamma - 1).epsilon(1e-15));
    CHECK(gamma_laurent(2).pole == Approx(0.5));
    CHECK(gamma_laurent(2).finite == Approx((1.5 - kEulerGamma) / 2).epsilon(1e-15));

    double (*fs[])(double) = {gamma_m0, gamma_m1, gamma_m2, gamma_m3};
    for (int n = 0; n < 4; ++n) {
        LaurentValue num = fit(fs[n], 1e-3);
        CHECK(gamma_laurent(n).pole == Approx(num.pole).epsilon(1e-9));
        CHECK(gamma_laurent(n).finite == Approx(num.finite).epsilon(1e-7));
    }
}

TEST_CASE("zeta at 1") {
    LaurentValue z = zeta_laurent_at_1();
    CHECK(z.pole == 1);
    CHECK(z.finite == Approx(kEulerGamma).epsilon(1e-15));
    // 1 + 1e-6 is not exact in binary; take the pole at the representable delta
    const double s1 = 1 + 1e-6, delta = s1 - 1;
    CHECK(std::fabs(riemann_zeta(s1) - 1 / delta - kEulerGamma) < 1e-5);
    LaurentValue num = fit(zeta_1, 1e-3);
    CHECK(num.finite == Approx(z.finite).epsilon(1e-8));
    // Hurwitz analog: zeta(s, a) - 1/(s - 1) -> -psi(a)
    for (double a : {0.25, 0.5, 1.0}) {
        double s = 1 + 1e-7;
        CHECK(hurwitz_zeta(s, a) - 1 / (s - 1) == Approx(hurwitz_regularized_at_1(a)).epsilon(1e-6));
    }
}

TEST_CASE("arithmetic and assert_finite") {
    LaurentValue x{2, 3}, y{-0.5, 1};
    CHECK((x + y).pole == 1.5);
    CHECK((x - y).finite == 2);
    CHECK((2.0 * x).pole == 4);
    // (p/eps + f)(v + s eps)
    LaurentValue xy = x * Jet{4, 0.25};
    CHECK(xy.pole == 8);
    CHECK(xy.finite == 12.5);

    CHECK(assert_finite({0, 3.2}) == 3.2);
    CHECK(assert_finite({1e-14, 1.0}) == 1.0);
    CHECK(assert_finite({1e-11, 1e3}) == 1e3);  // tolerance scales with |finite| above 1
    CHECK_THROWS_AS(assert_finite({1e-8, 1.0}), ResidualPoleError);
    try {
        assert_finite({0.25, 1.0});
        FAIL("no throw");
    } catch (const ResidualPoleError& e) {
        CHECK(e.pole == 0.25);
    }

    LaurentValue a{1e-13, 2.5}, b{-1e-13, -0.75};
    CHECK(assert_finite(a + b) == Approx(assert_finite(a) + assert_finite(b)).epsilon(1e-15));
}

TEST_CASE("d = 3 boson assembly: the two poles are -+ m^4 / (16 pi^2) and cancel") {
    for (double m : {0.3, 1.0, 2.0}) {
        HighTPieces p = thermal_highT_pieces(m, 1.0, 3);
        const double ref = std::pow(m, 4) / (16 * kPi * kPi);
        // the Gamma(-2) piece and the l = 2 piece (zeta at 1)
        CHECK(p.terms[1].pole == Approx(-ref).epsilon(1e-13));
        CHECK(p.terms[2 + 2].pole == Approx(ref).epsilon(1e-13));
        for (size_t i = 0; i < p.terms.size(); ++i)
            if (i != 1 && i != 4) CHECK(p.terms[i].pole == 0);
        CHECK(std::fabs(p.total.pole) < 1e-15 * ref);
    }
}

TEST_CASE("pole cancellation across the d = 3 assemblies") {
    for (double m : {0.1, 1.0, 10.0})
        for (double T : {1.0, 5.0}) {
            for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
                LaurentValue v = thermal_highT({s, m, T, 3});
                CHECK(std::fabs(v.pole) < 1e-12 * std::fabs(v.finite));
            }
            for (double om : {0.1, 0.25, 0.4}) {
                LaurentValue v = twisted_highT({m, 1 / T, 3, om});
                CHECK(std::fabs(v.pole) < 1e-12 * std::fabs(v.finite));
            }
        }
}
