#pragma once

#include <string>
#include <utility>
#include <vector>

#include "effpot/types.hpp"

namespace effpot {

struct FieldContent;

enum class Family { Thermal, Compact, Twisted };
const char* to_string(Family f);
Family parse_family(const std::string& s);

// Abscissa x is m/T for Thermal (m = x T) and m L for Compact/Twisted (m = x / L).
struct SweepSpec {
    Family family = Family::Thermal;
    Statistics statistics = Statistics::Boson;
    Boundary bc = Boundary::Periodic;
    double omega = 0.25;
    int d = 3;
    double scale = 1;  // T for Thermal, L otherwise
    std::vector<double> grid;
    std::vector<Strategy> strategies;
    bool normalize = true;  // report V / m^{d+1}
};
void validate(const SweepSpec& s);

// Parses "start:stop:count" (inclusive) or a comma list.
std::vector<double> parse_grid(const std::string& text);

struct SweepCell {
    double value = 0;
    int terms = 0;
    bool ok = true;
    std::string error;
};

struct SweepRow {
    double abscissa = 0;
    std::vector<SweepCell> cells;  // one per strategy, in spec order
    std::vector<double> reldiff;   // one per SweepTable::pairs
};

struct SweepTable {
    SweepSpec spec;
    // (i, j) strategy indices: |v_i - v_j| / |v_j|.  With a Quadrature column it is
    // the reference j of every pair; otherwise all i < j.
    std::vector<std::pair<int, int>> pairs;
    std::vector<SweepRow> rows;
    int flagged = 0;  // cells that raised
};

// Rows in grid order.  Parallel over rows, capped by EFFPOT_THREADS (or threads > 0).
SweepTable run_sweep(const SweepSpec& spec, const SeriesConfig& scfg = {}, const QuadConfig& qcfg = {},
                     int threads = 0);
int sweep_threads();

std::string sweep_csv(const SweepTable& t);
std::string sweep_json(const SweepTable& t);

struct ConvergenceQuery {
    Family family = Family::Thermal;
    Statistics statistics = Statistics::Boson;
    Boundary bc = Boundary::Periodic;
    double omega = 0.25;
    int d = 3;
    double scale = 1;
    Strategy strategy = Strategy::BesselSeries;  // BesselSeries or HighTExpansion
    double abscissa = 1;
};

struct ConvergenceReport {
    std::vector<std::pair<int, double>> partial_sums;
    std::vector<double> terms;  // partial_sums[i] - partial_sums[i-1]
    // least-squares slope of ln|term| against the index over the second half of
    // the nonzero terms
    double log_slope = 0;
};

ConvergenceReport convergence_report(const ConvergenceQuery& q, const SeriesConfig& cfg = {});

struct LedgerProbe {
    std::string point;
    double printed = 0;
    double oracle = 0;
    double rel = 0;
};

struct LedgerEntry {
    std::string operation;
    std::string description;
    std::string oracle;
    std::vector<LedgerProbe> probes;
    double max_rel = 0;
    bool flagged = false;
};

struct LedgerReport {
    double tolerance = 1e-3;
    std::vector<LedgerEntry> entries;
    std::vector<LedgerEntry> models;  // per-mass probes of the field content, empty without one
    std::vector<std::string> flagged() const;
};

LedgerReport discrepancy_ledger(const FieldContent* fc = nullptr);
std::string ledger_json(const LedgerReport& r);

struct InvariantResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The invariant suite behind `validate`.
std::vector<InvariantResult> run_invariants();

}  // namespace effpot
