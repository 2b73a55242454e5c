#pragma once

#include "effpot/thermal.hpp"

namespace effpot {

// S^1 x R^d with circumference L.  Periodic fields see the boson frequencies
// 2 pi n / L, antiperiodic ones (2n+1) pi / L, whatever their spin.
struct CompactQuery {
    Boundary bc = Boundary::Periodic;
    double m = 0;
    double L = 1;
    int d = 3;
    Strategy strategy = Strategy::Quadrature;
};

// Thermal counterpart with T = 1/L, times 1/2 (one real degree of freedom:
// the massless periodic d = 3 value is -pi^2 / (90 L^4)).
constexpr double kCompactNormalization = 0.5;

PotentialQuery thermal_counterpart(const CompactQuery& q);

EvalResult compact_potential(const CompactQuery& q, const SeriesConfig& scfg = {},
                             const QuadConfig& qcfg = {}, Diagnostics* diag = nullptr);

// Printed small-L closed forms of (1/L) int d^dk/(2 pi)^d sum_n ln(w_n^2 + k^2 + m^2),
// i.e. without the 1/2 above.
Transcription compact_closed_d3(Boundary bc, double m, double L);
Transcription compact_closed_d2(Boundary bc, double m, double L);

// m^2 = lambda / (24 L^2) periodic, -lambda / (48 L^2) antiperiodic
double topological_mass(Boundary bc, double lambda, double L);

// Same quantity as V''(0) of the compact potential with m^2 = lambda phi^2 / 2,
// by second differences with one Richardson step (the |phi|^3 term makes the
// plain difference first order in h). h is the step in the dimensionless m L,
// so the truncation error does not depend on L or lambda.
double topological_mass_fd(Boundary bc, double lambda, double L, int d = 3, double h = 2e-3,
                           Strategy strategy = Strategy::HighTExpansion);

// -3 zeta(5) / (64 pi^4 r_c^4) as printed
double rs_massless_casimir(double r_c);

// The massless tower n pi / r_c summed directly:
// (1/2) sum_n int d^4k/(2 pi)^4 ln(k^2 + (n pi / r_c)^2), zeta-regularized,
// = -pi^2 zeta'(-4) / (16 r_c^4).
double rs_tower_zeta(double r_c);
// The same tower through the generic machinery: 1/2 L V_thermal(d = 4, m = 0, T = 1/L), L = 2 r_c.
double rs_tower_quadrature(double r_c, const QuadConfig& cfg = {});

}  // namespace effpot
