#pragma once

#include <vector>

#include "effpot/laurent.hpp"
#include "effpot/types.hpp"

namespace effpot {

// Temperature-dependent one-loop potential density, d spatial dimensions.
struct PotentialQuery {
    Statistics statistics = Statistics::Boson;
    double m = 0;
    double T = 1;
    int d = 3;
    Strategy strategy = Strategy::Quadrature;
};

void validate(const PotentialQuery& q);

// sum_{|n| <= n_max} 1 / (w_n^2 + a^2), w_n = 2 pi n T or (2n+1) pi T
double matsubara_partial_fraction(Statistics s, double a, double T, long n_max);

// a/T + 2 ln(1 -+ e^{-a/T}) - 2 ln 2
double log_sum_identity(Statistics s, double a, double T);

// 2T S_d / (2 pi)^d int_0^inf k^{d-1} ln(1 -+ e^{-E/T}) dk.  The reference value.
EvalResult thermal_quadrature(const PotentialQuery& q, const QuadConfig& cfg = {});

// -4/(4 pi)^nu sum_q w_q m^{2 nu} K_nu(a q) / (a q / 2)^nu, nu = (d+1)/2, a = m/T,
// w_q = 1 (boson) or (-1)^q (fermion).  m = 0 uses the zeta / eta limit.
EvalResult thermal_bessel(const PotentialQuery& q, const SeriesConfig& cfg = {});

// Partial sums of the Bessel series (index, partial sum), for convergence studies.
std::vector<std::pair<int, double>> thermal_bessel_partial_sums(const PotentialQuery& q,
                                                                const SeriesConfig& cfg = {});

// Pieces of the zeta-regularized small-m/T expansion, each already multiplied by
// the overall prefactor:
//   [0] the a^{d} Gamma(1/2 - nu) term
//   [1] the a^{d+1} Gamma(-nu) term
//   [2 + l] the l-th term of the p = (a / 2 pi)^2 series
// The sum of the pieces is the potential; individual poles cancel in the sum.
struct HighTPieces {
    std::vector<LaurentValue> terms;
    LaurentValue total;
};

// Boson only; fermions go through V_F(T) = 2 V_B(T/2) - V_B(T).
HighTPieces thermal_highT_pieces(double m, double T, int d, const SeriesConfig& cfg = {});

LaurentValue thermal_highT(const PotentialQuery& q, const SeriesConfig& cfg = {},
                           Diagnostics* diag = nullptr);

// The printed closed forms, evaluated literally.
struct Transcription {
    double value;
    const char* provenance;
};

Transcription thermal_closed_d3_boson(double m, double T);
Transcription thermal_closed_d3_fermion(double m, double T);
Transcription thermal_closed_d2_boson(double m, double T);
Transcription thermal_closed_d2_fermion(double m, double T);

// int_0^inf x^2 ln(1 - e^{-sqrt(x^2 + y)}) dx.  Boson d = 3 potential is T^4 J_B / pi^2.
double jb_integral(double y, const QuadConfig& cfg = {});

// Dispatch on q.strategy.  HighTExpansion returns the pole-checked finite part.
EvalResult thermal_potential(const PotentialQuery& q, const SeriesConfig& scfg = {},
                             const QuadConfig& qcfg = {}, Diagnostics* diag = nullptr);

}  // namespace effpot
