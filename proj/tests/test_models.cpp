#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "effpot/errors.hpp"
#include "effpot/models.hpp"
#include "effpot/specfun.hpp"
#include "effpot/thermal.hpp"

using namespace effpot;
using doctest::Approx;

namespace {

double cw(double m, double Q) { return m == 0 ? 0 : std::pow(m, 4) * (std::log(m * m / (Q * Q)) - 1.5); }

}  // namespace

TEST_CASE("susy potential") {
    FieldContent empty;
    CHECK(susy_finite_T_potential(empty, 0.37) == 0.37);

    const double pi2 = kPi * kPi;
    FieldContent one;
    one.scalar_masses = {0};
    CHECK(susy_finite_T_potential(one, 1) == Approx(1 + (-pi2 / 45) / (64 * pi2)).epsilon(1e-14));

    // assembled by hand from the thermal oracle and the CW form
    FieldContent fc;
    fc.scalar_masses = {0.4};
    fc.gauge_masses = {1.1};
    fc.fermion_masses = {0.7};
    fc.Q = 2;
    fc.T = 1.5;
    auto th = [&](Statistics s, double m) { return thermal_quadrature({s, m, fc.T, 3}).value; };
    double zero = cw(0.4, 2) + 3 * cw(1.1, 2) - 2 * cw(0.7, 2);
    double therm = th(Statistics::Boson, 0.4) + 3 * th(Statistics::Boson, 1.1) - 2 * th(Statistics::Fermion, 0.7);
    CHECK(susy_zero_T_part(fc) == Approx(zero).epsilon(1e-14));
    CHECK(susy_thermal_part(fc) == Approx(therm).epsilon(1e-14));
    CHECK(susy_finite_T_potential(fc, 0.5) == Approx(0.5 + (zero + therm) / (64 * pi2)).epsilon(1e-14));
}

TEST_CASE("susy invariants") {
    FieldContent a, b, ab;
    a.scalar_masses = {0.3, 1.2};
    a.fermion_masses = {0.7};
    b.gauge_masses = {0.9};
    b.fermion_masses = {2.0};
    ab.scalar_masses = a.scalar_masses;
    ab.gauge_masses = b.gauge_masses;
    ab.fermion_masses = {0.7, 2.0};
    CHECK(susy_finite_T_potential(a, 0.1) + susy_finite_T_potential(b, 0.1) - 0.1 ==
          Approx(susy_finite_T_potential(ab, 0.1)).epsilon(1e-14));

    // two scalar and two fermion degrees of freedom at equal mass
    FieldContent s;
    s.scalar_masses = {0.8, 0.8};
    s.fermion_masses = {0.8};
    CHECK(std::fabs(susy_zero_T_part(s)) < 1e-12);
    CHECK(std::fabs(susy_thermal_part(s)) > 1e-3);

    // massless degenerate content: bosons -pi^2 T^4/45 each, fermions +7 pi^2 T^4/360 each
    FieldContent z;
    z.scalar_masses = {0, 0};
    z.fermion_masses = {0};
    CHECK(susy_thermal_part(z) == Approx(-2 * kPi * kPi / 45 - 2 * 7 * kPi * kPi / 360).epsilon(1e-12));
}

TEST_CASE("susy validation") {
    FieldContent fc;
    fc.scalar_masses = {-1};
    CHECK_THROWS_AS(susy_finite_T_potential(fc, 0), DomainError);
    FieldContent q;
    q.Q = 0;
    CHECK_THROWS_AS(susy_finite_T_potential(q, 0), DomainError);
}

TEST_CASE("standard-model gauge piece") {
    FieldContent fc;
    fc.gauge_masses = {0};
    CHECK(sm_gauge_one_loop(fc) == Approx(3 * (-std::pow(kPi, 4) / 45) / (2 * kPi * kPi)).epsilon(1e-12));
    fc.gauge_masses = {1};
    CHECK(sm_gauge_one_loop(fc) == Approx(3 * jb_integral(1) / (2 * kPi * kPi)).epsilon(1e-14));
    fc.gauge_masses = {80};
    CHECK(std::fabs(sm_gauge_one_loop(fc)) < 1e-30);
    fc.gauge_masses = {1, 2};
    fc.T = 2;
    CHECK(sm_gauge_one_loop(fc) ==
          Approx(3 * (jb_integral(0.25) + jb_integral(1)) * 16 / (2 * kPi * kPi)).epsilon(1e-14));
    FieldContent none;
    CHECK_THROWS_AS(sm_gauge_one_loop(none), DomainError);
}
