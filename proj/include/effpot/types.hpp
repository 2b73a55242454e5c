#pragma once

#include <string>
#include <vector>

namespace effpot {

enum class Statistics { Boson, Fermion };
enum class Strategy { Quadrature, BesselSeries, HighTExpansion, ClosedForm };
enum class Boundary { Periodic, Antiperiodic };

struct SeriesConfig {
    double rel_tol = 1e-10;
    int max_terms = 10000;
    int sigma = 8;  // truncation order of the high-temperature series
};

struct QuadConfig {
    double rel_tol = 1e-13;
    double abs_tol = 1e-300;
    int max_subdivisions = 15;  // bisection depth of the adaptive rule
};

struct EvalResult {
    double value = 0;
    double abs_err_est = 0;
    int terms_used = 0;
    Strategy strategy = Strategy::Quadrature;
    double pole_residual = 0;
};

// Soft diagnostics (expansion used outside its radius etc).  Optional sink.
struct Diagnostics {
    std::vector<std::string> warnings;
};

const char* to_string(Statistics s);
const char* to_string(Strategy s);
const char* to_string(Boundary b);
Statistics parse_statistics(const std::string& s);
Strategy parse_strategy(const std::string& s);
Boundary parse_boundary(const std::string& s);

}  // namespace effpot
