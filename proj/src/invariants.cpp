#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "effpot/compact.hpp"
#include "effpot/errors.hpp"
#include "effpot/harness.hpp"
#include "effpot/laurent.hpp"
#include "effpot/models.hpp"
#include "effpot/specfun.hpp"
#include "effpot/thermal.hpp"
#include "effpot/twisted.hpp"

namespace effpot {

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

struct Suite {
    std::vector<InvariantResult> out;

    // check(name, f): f returns the worst deviation, compared with tol
    void check(const std::string& name, double tol, const std::function<double()>& f) {
        InvariantResult r{name, false, ""};
        try {
            double worst = f();
            r.passed = worst <= tol;
            std::ostringstream s;
            s << "worst " << worst << " (tol " << tol << ")";
            r.detail = s.str();
        } catch (const std::exception& e) {
            r.detail = std::string("raised: ") + e.what();
        }
        out.push_back(r);
    }

    void holds(const std::string& name, const std::function<bool()>& f) {
        InvariantResult r{name, false, ""};
        try {
            r.passed = f();
            r.detail = r.passed ? "holds" : "violated";
        } catch (const std::exception& e) {
            r.detail = std::string("raised: ") + e.what();
        }
        out.push_back(r);
    }
};

double brute_square(double s, double a, double b, double c, double q, int R) {
    long double sum = 0;
    for (int m = -R; m <= R; ++m)
        for (int n = -R; n <= R; ++n) {
            double Q = a * m * m + b * double(m) * n + c * double(n) * n + q;
            if (Q == 0) continue;
            sum += std::pow((long double)Q, -(long double)s);
        }
    return double(sum);
}

}  // namespace

std::vector<InvariantResult> run_invariants() {
    Suite S;
    const std::vector<double> grid4 = {0.1, 0.25, 0.5, 0.8};

    // specfun
    S.check("bessel_k recurrence", 1e-10, [] {
        double w = 0;
        for (double nu : {1.0, 1.5, 2.0, 2.5})
            for (double z : {0.1, 1.0, 10.0}) {
                double r = bessel_k(nu + 1, z) - bessel_k(nu - 1, z) - 2 * nu / z * bessel_k(nu, z);
                w = std::max(w, std::fabs(r) / bessel_k(nu + 1, z));
            }
        return w;
    });
    S.check("hurwitz ladder", 1e-10, [] {
        double w = 0;
        for (double s : {-3.0, -1.5, 0.5, 2.0, 3.5})
            for (double a : {0.25, 0.5, 0.75}) {
                double lhs = hurwitz_zeta(s, a), rhs = detail::hurwitz_zeta_any(s, a + 1) + std::pow(a, -s);
                w = std::max(w, rel(rhs, lhs));
            }
        return w;
    });
    S.check("riemann zeta trivial zeros", 1e-12, [] {
        double w = 0;
        for (int n : {1, 2, 3}) w = std::max(w, std::fabs(riemann_zeta(-2.0 * n)));
        return w;
    });
    S.check("digamma recurrence", 1e-12, [] {
        double w = 0;
        for (double x : {0.25, 0.5, 1.0, 2.5}) w = std::max(w, std::fabs(digamma(x + 1) - digamma(x) - 1 / x));
        return w;
    });
    S.check("polylog_circle at beta = 0", 1e-10, [] {
        double w = 0;
        for (int s : {2, 3, 4, 6}) w = std::max(w, rel(polylog_circle(s, 0).first, riemann_zeta(s)));
        return w;
    });
    S.check("chowla_selberg and epstein_zeta_nd vs lattice sum", 1e-10, [] {
        double bf = brute_square(3, 1, 0, 1, 1, 400);
        return std::max(rel(chowla_selberg(3, {1, 0, 1, 1}), bf), rel(epstein_zeta_nd(3, {1, 1}, 1), bf));
    });

    // laurent
    S.check("assert_finite linearity", 1e-15, [] {
        LaurentValue x{1e-14, 2.5}, y{-1e-14, -0.75};
        return std::fabs(assert_finite(x + y) - (assert_finite(x) + assert_finite(y)));
    });
    S.check("pole cancellation (d = 3 boson, fermion, twisted)", 1e-12, [] {
        double w = 0;
        for (double m : {0.1, 1.0, 10.0})
            for (double T : {1.0, 5.0}) {
                for (Statistics s : {Statistics::Boson, Statistics::Fermion}) {
                    LaurentValue v = thermal_highT({s, m, T, 3});
                    w = std::max(w, std::fabs(v.pole) / std::fabs(v.finite));
                }
                for (double om : {0.1, 0.25, 0.4}) {
                    LaurentValue v = twisted_highT({m, 1 / T, 3, om});
                    w = std::max(w, std::fabs(v.pole) / std::fabs(v.finite));
                }
            }
        return w;
    });

    // thermal
    S.check("thermal bessel vs quadrature", 1e-8, [&] {
        double w = 0;
        for (int d : {2, 3, 4})
            for (Statistics s : {Statistics::Boson, Statistics::Fermion})
                for (double a : grid4) {
                    PotentialQuery q{s, a, 1, d};
                    w = std::max(w, rel(thermal_bessel(q).value, thermal_quadrature(q).value));
                }
        return w;
    });
    S.check("thermal high-T vs quadrature, d = 3", 1e-3, [&] {
        double w = 0;
        for (Statistics s : {Statistics::Boson, Statistics::Fermion})
            for (double a : grid4) {
                PotentialQuery q{s, a, 1, 3};
                w = std::max(w, rel(thermal_highT(q).finite, thermal_quadrature(q).value));
            }
        return w;
    });
    S.check("thermal high-T vs quadrature, d = 2", 1e-8, [&] {
        double w = 0;
        for (Statistics s : {Statistics::Boson, Statistics::Fermion})
            for (double a : grid4) {
                PotentialQuery q{s, a, 1, 2};
                w = std::max(w, rel(thermal_highT(q).finite, thermal_quadrature(q).value));
            }
        return w;
    });
    S.check("theta function Poisson identity", 1e-12, [] {
        double w = 0;
        for (double lam : {0.1, 1.0, 10.0}) {
            auto [l, r] = phased_poisson(lam, 0);
            w = std::max(w, std::abs(l - r) / std::abs(r));
        }
        return w;
    });
    S.holds("boson potential negative, |V| decreasing in m/T", [] {
        double prev = HUGE_VAL;
        for (double a : {0.1, 0.25, 0.5, 0.8, 1.0, 2.0, 5.0}) {
            double v = thermal_quadrature({Statistics::Boson, a, 1, 3}).value;
            if (!(v < 0) || !(std::fabs(v) < prev)) return false;
            prev = std::fabs(v);
        }
        return true;
    });
    S.check("fermion doubling identity, term by term", 1e-12, [] {
        // alternating partial sum to 2N against 2 (boson at T/2 to N) - (boson at T to 2N)
        double w = 0;
        for (int d : {2, 3, 4})
            for (double a : {0.3, 1.0, 3.0}) {
                auto f = thermal_bessel_partial_sums({Statistics::Fermion, a, 1, d});
                auto b1 = thermal_bessel_partial_sums({Statistics::Boson, a, 1, d});
                auto b2 = thermal_bessel_partial_sums({Statistics::Boson, a, 0.5, d});
                size_t n = std::min({f.size() / 2, b1.size() / 2, b2.size()});
                for (size_t k = 1; k <= n; ++k) {
                    double lhs = f[2 * k - 1].second, rhs = 2 * b2[k - 1].second - b1[2 * k - 1].second;
                    w = std::max(w, rel(rhs, lhs));
                }
            }
        return w;
    });

    // compact
    S.check("compact delegation to thermal at T = 1/L", 1e-12, [] {
        double w = 0;
        for (Boundary bc : {Boundary::Periodic, Boundary::Antiperiodic})
            for (Strategy st : {Strategy::Quadrature, Strategy::BesselSeries, Strategy::HighTExpansion}) {
                CompactQuery q{bc, 1.0, 0.3, 3, st};
                PotentialQuery t = thermal_counterpart(q);
                t.strategy = st;
                w = std::max(w, rel(compact_potential(q).value, kCompactNormalization * thermal_potential(t).value));
            }
        return w;
    });
    S.check("casimir ratio |anti / periodic| = 7/8", 1e-8, [] {
        double p = compact_potential({Boundary::Periodic, 0, 1, 3}).value;
        double a = compact_potential({Boundary::Antiperiodic, 0, 1, 3}).value;
        if (!(p < 0 && a > 0)) return HUGE_VAL;
        return std::fabs(std::fabs(a / p) - 7.0 / 8.0);
    });
    S.check("massless L^{-(d+1)} scaling", 1e-12, [] {
        double w = 0;
        for (int d : {2, 3, 4})
            for (Boundary bc : {Boundary::Periodic, Boundary::Antiperiodic}) {
                double v1 = compact_potential({bc, 0, 1, d}).value;
                for (double L : {0.5, 2.0})
                    w = std::max(w, rel(compact_potential({bc, 0, L, d}).value * std::pow(L, d + 1), v1));
            }
        return w;
    });

    // twisted
    S.check("twist reductions to periodic / antiperiodic", 1e-10, [] {
        double w = 0;
        for (int d : {2, 3, 4})
            for (double mL : {0.0, 0.3, 1.0, 3.0})
                for (Strategy st : {Strategy::Quadrature, Strategy::BesselSeries}) {
                    double p = compact_potential({Boundary::Periodic, mL, 1, d, st}).value;
                    double a = compact_potential({Boundary::Antiperiodic, mL, 1, d, st}).value;
                    w = std::max(w, rel(twisted_potential({mL, 1, d, 0.0, st}).value, p));
                    w = std::max(w, rel(twisted_potential({mL, 1, d, 0.5, st}).value, a));
                }
        return w;
    });
    S.check("twist periodicity omega -> omega + 1", 1e-10, [] {
        double a = twisted_bessel({1, 1, 3, 0.999}).value;
        double b = twisted_bessel({1, 1, 3, -0.001 + 1}).value;
        return rel(a, b);
    });
    S.check("twist reflection omega -> 1 - omega", 1e-12, [] {
        double w = 0;
        for (double om : {0.1, 0.25, 0.4})
            for (Strategy st : {Strategy::Quadrature, Strategy::BesselSeries})
                w = std::max(w, rel(twisted_potential({1, 1, 3, 1 - om, st}).value,
                                    twisted_potential({1, 1, 3, om, st}).value));
        return w;
    });
    S.check("twisted bessel vs quadrature", 1e-8, [] {
        double w = 0;
        for (double om : {0.1, 0.25, 0.4})
            for (double mL : {0.3, 1.0, 3.0})
                for (int d : {2, 3}) {
                    TwistQuery q{mL, 1, d, om};
                    w = std::max(w, rel(twisted_bessel(q).value, twisted_quadrature(q).value));
                }
        return w;
    });
    S.check("phased Poisson identity", 1e-12, [] {
        double w = 0;
        for (double lam : {0.1, 1.0, 10.0})
            for (double beta : {0.0, kPi / 3, kPi}) {
                // at beta = pi and small lambda both sides are ~1e-10 out of O(1) terms,
                // so agreement is measured on the scale of the unphased sum
                auto [l, r] = phased_poisson(lam, beta);
                w = std::max(w, std::abs(l - r) / phased_poisson(lam, 0).first.real());
            }
        return w;
    });

    // models
    S.check("susy additivity over concatenated content", 1e-12, [] {
        FieldContent a, b, ab;
        a.scalar_masses = {0.3, 1.2};
        a.fermion_masses = {0.7};
        b.gauge_masses = {0.9};
        b.fermion_masses = {2.0};
        ab.scalar_masses = a.scalar_masses;
        ab.gauge_masses = b.gauge_masses;
        ab.fermion_masses = {0.7, 2.0};
        const double V0 = 0.125;
        double whole = susy_finite_T_potential(ab, V0);
        double parts = susy_finite_T_potential(a, V0) + susy_finite_T_potential(b, V0) - V0;
        return rel(parts, whole);
    });
    S.holds("susy zero-T cancellation, thermal breaking", [] {
        FieldContent fc;
        fc.scalar_masses = {0.8, 0.8};
        fc.fermion_masses = {0.8};
        return std::fabs(susy_zero_T_part(fc)) < 1e-12 && std::fabs(susy_thermal_part(fc)) > 1e-6;
    });

    // harness
    S.holds("sweep determinism (identical CSV bytes)", [] {
        SweepSpec s;
        s.d = 4;
        s.grid = parse_grid("0.1:0.9:9");
        s.strategies = {Strategy::BesselSeries, Strategy::HighTExpansion};
        return sweep_csv(run_sweep(s)) == sweep_csv(run_sweep(s, {}, {}, 1));
    });
    S.check("sweep oracle dominance (exact strategies)", 1e-8, [] {
        double w = 0;
        for (Family f : {Family::Thermal, Family::Compact, Family::Twisted}) {
            SweepSpec s;
            s.family = f;
            s.grid = {0.1, 0.5, 1.0, 2.0, 5.0};
            s.strategies = {Strategy::BesselSeries, Strategy::Quadrature};
            for (const auto& r : run_sweep(s).rows) w = std::max(w, r.reldiff.at(0));
        }
        return w;
    });

    return S.out;
}

}  // namespace effpot
