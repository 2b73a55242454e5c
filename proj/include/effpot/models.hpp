#pragma once

#include <vector>

#include "effpot/types.hpp"

namespace effpot {

struct FieldContent {
    std::vector<double> scalar_masses;   // weight 1
    std::vector<double> gauge_masses;    // weight 3
    std::vector<double> fermion_masses;  // weight -2
    double Q = 1;                        // renormalization scale
    double T = 1;
};

void validate(const FieldContent& fc);

// V0 + (V_{T=0} + V_{T!=0}) / (64 pi^2) with
//   V_{T=0}  = sum_w w m^4 (ln(m^2/Q^2) - 3/2)
//   V_{T!=0} = sum_w w V_thermal(m, T, d = 3), V_thermal = int d^3k/(2 pi)^3 2T ln(1 -+ e^{-E/T})
double susy_finite_T_potential(const FieldContent& fc, double V0, const QuadConfig& cfg = {});

// The two pieces separately (without V0 and without the 1/64 pi^2).
double susy_zero_T_part(const FieldContent& fc);
double susy_thermal_part(const FieldContent& fc, const QuadConfig& cfg = {});

// 3 sum_j J_B(M_j^2 / T^2) T^4 / (2 pi^2); the T = 0 piece is not included.
double sm_gauge_one_loop(const FieldContent& fc, const QuadConfig& cfg = {});

}  // namespace effpot
