#include "effpot/models.hpp"

#include <cmath>

#include "effpot/errors.hpp"
#include "effpot/specfun.hpp"
#include "effpot/thermal.hpp"

namespace effpot {

namespace {

double cw(double m, double Q) {
    if (m == 0) return 0.0;
    double m2 = m * m;
    return m2 * m2 * (std::log(m2 / (Q * Q)) - 1.5);
}

double radiation(Statistics s, double m, double T, const QuadConfig& cfg) {
    return thermal_quadrature(PotentialQuery{s, m, T, 3, Strategy::Quadrature}, cfg).value;
}

}  // namespace

void validate(const FieldContent& fc) {
    if (!(fc.Q > 0)) throw DomainError("renormalization scale Q must be positive");
    if (!(fc.T > 0)) throw DomainError("temperature must be positive");
    for (auto* list : {&fc.scalar_masses, &fc.gauge_masses, &fc.fermion_masses})
        for (double m : *list)
            if (!(m >= 0)) throw DomainError("masses must be non-negative");
}

double susy_zero_T_part(const FieldContent& fc) {
    validate(fc);
    double v = 0;
    for (double m : fc.scalar_masses) v += cw(m, fc.Q);
    for (double m : fc.gauge_masses) v += 3 * cw(m, fc.Q);
    for (double m : fc.fermion_masses) v -= 2 * cw(m, fc.Q);
    return v;
}

double susy_thermal_part(const FieldContent& fc, const QuadConfig& cfg) {
    validate(fc);
    double v = 0;
    for (double m : fc.scalar_masses) v += radiation(Statistics::Boson, m, fc.T, cfg);
    for (double m : fc.gauge_masses) v += 3 * radiation(Statistics::Boson, m, fc.T, cfg);
    for (double m : fc.fermion_masses) v -= 2 * radiation(Statistics::Fermion, m, fc.T, cfg);
    return v;
}

double susy_finite_T_potential(const FieldContent& fc, double V0, const QuadConfig& cfg) {
    return V0 + (susy_zero_T_part(fc) + susy_thermal_part(fc, cfg)) / (64 * kPi * kPi);
}

double sm_gauge_one_loop(const FieldContent& fc, const QuadConfig& cfg) {
    validate(fc);
    if (fc.gauge_masses.empty()) throw DomainError("sm_gauge_one_loop: no gauge masses given");
    const double T = fc.T, T4 = std::pow(T, 4);
    double v = 0;
    for (double M : fc.gauge_masses) v += jb_integral(M * M / (T * T), cfg);
    return 3 * v * T4 / (2 * kPi * kPi);
}

}  // namespace effpot
