#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "effpot/laurent.hpp"
#include "effpot/thermal.hpp"

namespace effpot {

// phi(x, 0) = e^{-i w} phi(x, L), omega = w / 2 pi, beta = 2 pi omega.  Frequencies
// (n + omega) 2 pi / L.  omega = 0 is the periodic and omega = 1/2 the antiperiodic case.
struct TwistQuery {
    double m = 0;
    double L = 1;
    int d = 3;
    double omega = 0;
    Strategy strategy = Strategy::Quadrature;
};

void validate(const TwistQuery& q);

// All twisted potentials carry the same 1/2 as the compact ones, so omega = 0
// and omega = 1/2 reproduce compact_potential exactly.

// (1/2L) int d^dk/(2 pi)^d ln(1 - 2 e^{-x} cos beta + e^{-2x}), x = L sqrt(k^2 + m^2).
EvalResult twisted_quadrature(const TwistQuery& q, const QuadConfig& cfg = {});

// -(1/2) 4/(4 pi)^nu sum_{q>=1} cos(beta q) m^{2 nu} K_nu(a q) / (a q / 2)^nu, a = m L.
EvalResult twisted_bessel(const TwistQuery& q, const SeriesConfig& cfg = {});
std::vector<std::pair<int, double>> twisted_bessel_partial_sums(const TwistQuery& q,
                                                                const SeriesConfig& cfg = {});

// sum_q e^{-lambda q^2} e^{-i beta q}  and  sqrt(pi/lambda) sum_k e^{-(beta + 2 pi k)^2 / 4 lambda}
std::pair<std::complex<double>, std::complex<double>> phased_poisson(double lambda, double beta);

// Hurwitz-zeta assembly, omega in (0, 1).  Pieces (each with the prefactor):
//   [0] the two separated k = 0, -1 modes, (omega^2 + p)^{nu-1/2} + ((1-omega)^2 + p)^{nu-1/2}
//   [1] the a^{d+1} Gamma(-nu) term
//   [2 + l] the l-th Hurwitz term, zeta(1 - 2nu + 2l, 1 + omega) + zeta(., 2 - omega)
HighTPieces twisted_highT_pieces(double m, double L, int d, double omega, const SeriesConfig& cfg = {});
LaurentValue twisted_highT(const TwistQuery& q, const SeriesConfig& cfg = {}, Diagnostics* diag = nullptr);

// Printed d = 3 closed form, in the (1/L) sum_n normalization (no 1/2).
Transcription twisted_closed_d3(double m, double L, double omega);

EvalResult twisted_potential(const TwistQuery& q, const SeriesConfig& scfg = {},
                             const QuadConfig& qcfg = {}, Diagnostics* diag = nullptr);

// (1/2) sum_n int d^dp/(2 pi)^d ln[(p^2 + (n+qB)^2/R^2 + M^2) / (p^2 + (n+qF)^2/R^2 + M^2)]
// = L [twisted(qB) - twisted(qF)] at L = 2 pi R.
double scherk_schwarz_potential(double M, double R, int d, double qB, double qF,
                                Strategy strategy = Strategy::BesselSeries, const SeriesConfig& scfg = {},
                                const QuadConfig& qcfg = {});

// d^2 V / d phi^2 at phi0 for M^2 = mass_profile(phi), second differences at h and
// h/2 combined by one Richardson step.  h <= 0 picks 1e-3 max(1, |phi0|).
double ss_mass_correction(const std::function<double(double)>& mass_profile, double phi0, double h,
                          double R, double qB, double qF, int d,
                          Strategy strategy = Strategy::BesselSeries, const SeriesConfig& scfg = {},
                          Diagnostics* diag = nullptr);

}  // namespace effpot
