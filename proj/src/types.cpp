#include "effpot/types.hpp"

#include "effpot/errors.hpp"

namespace effpot {

const char* to_string(Statistics s) { return s == Statistics::Boson ? "boson" : "fermion"; }

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::Quadrature: return "quadrature";
        case Strategy::BesselSeries: return "bessel";
        case Strategy::HighTExpansion: return "hight";
        case Strategy::ClosedForm: return "closed";
    }
    return "?";
}

const char* to_string(Boundary b) { return b == Boundary::Periodic ? "periodic" : "antiperiodic"; }

Statistics parse_statistics(const std::string& s) {
    if (s == "boson") return Statistics::Boson;
    if (s == "fermion") return Statistics::Fermion;
    throw DomainError("unknown statistics '" + s + "'");
}

Strategy parse_strategy(const std::string& s) {
    if (s == "quadrature" || s == "quad") return Strategy::Quadrature;
    if (s == "bessel") return Strategy::BesselSeries;
    if (s == "hight" || s == "high-t" || s == "highT") return Strategy::HighTExpansion;
    if (s == "closed") return Strategy::ClosedForm;
    throw DomainError("unknown strategy '" + s + "'");
}

Boundary parse_boundary(const std::string& s) {
    if (s == "periodic") return Boundary::Periodic;
    if (s == "antiperiodic") return Boundary::Antiperiodic;
    throw DomainError("unknown boundary condition '" + s + "'");
}

}  // namespace effpot
