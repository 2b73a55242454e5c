#include "effpot/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "effpot/compact.hpp"
#include "effpot/errors.hpp"
#include "effpot/models.hpp"
#include "effpot/specfun.hpp"
#include "effpot/thermal.hpp"
#include "effpot/twisted.hpp"

namespace effpot {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double mass_of(Family f, double x, double scale) { return f == Family::Thermal ? x * scale : x / scale; }

EvalResult evaluate(const SweepSpec& s, Strategy st, double x, const SeriesConfig& scfg,
                    const QuadConfig& qcfg) {
    const double m = mass_of(s.family, x, s.scale);
    switch (s.family) {
        case Family::Thermal:
            return thermal_potential({s.statistics, m, s.scale, s.d, st}, scfg, qcfg);
        case Family::Compact: return compact_potential({s.bc, m, s.scale, s.d, st}, scfg, qcfg);
        case Family::Twisted: return twisted_potential({m, s.scale, s.d, s.omega, st}, scfg, qcfg);
    }
    throw DomainError("unknown family");
}

SweepRow compute_row(const SweepTable& t, double x, const SeriesConfig& scfg, const QuadConfig& qcfg) {
    const SweepSpec& s = t.spec;
    SweepRow row;
    row.abscissa = x;
    const double norm = s.normalize ? std::pow(mass_of(s.family, x, s.scale), s.d + 1) : 1.0;
    for (Strategy st : s.strategies) {
        SweepCell c;
        try {
            EvalResult r = evaluate(s, st, x, scfg, qcfg);
            c.value = r.value / norm;
            c.terms = r.terms_used;
        } catch (const std::exception& e) {
            c.ok = false;
            c.value = kNaN;
            c.error = e.what();
        }
        row.cells.push_back(c);
    }
    for (auto [i, j] : t.pairs) {
        const SweepCell &a = row.cells[i], &b = row.cells[j];
        row.reldiff.push_back(a.ok && b.ok ? rel(a.value, b.value) : kNaN);
    }
    return row;
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::Thermal: return "thermal";
        case Family::Compact: return "compact";
        case Family::Twisted: return "twisted";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "thermal") return Family::Thermal;
    if (s == "compact") return Family::Compact;
    if (s == "twisted") return Family::Twisted;
    throw DomainError("unknown family '" + s + "' (thermal|compact|twisted)");
}

void validate(const SweepSpec& s) {
    if (s.grid.empty()) throw DomainError("sweep grid is empty");
    for (size_t i = 0; i < s.grid.size(); ++i) {
        if (!(s.grid[i] > 0)) throw DomainError("sweep abscissae must be positive");
        if (i && !(s.grid[i] > s.grid[i - 1])) throw DomainError("sweep grid must be strictly increasing");
    }
    if (s.strategies.empty()) throw DomainError("sweep needs at least one strategy");
    if (!(s.scale > 0)) throw DomainError("sweep scale (T or L) must be positive");
    if (s.d < 2 || s.d > 5) throw DomainError("spatial dimension must be 2, 3, 4 or 5");
    if (s.family == Family::Twisted && !(s.omega >= 0 && s.omega < 1))
        throw DomainError("twist omega must lie in [0, 1)");
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    auto to_d = [&](const std::string& t) {
        size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != t.size()) throw DomainError("bad number '" + t + "' in grid");
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw DomainError("grid must be start:stop:count");
        double a = to_d(parts[0]), b = to_d(parts[1]), c = to_d(parts[2]);
        if (c < 1 || c != std::floor(c)) throw DomainError("grid count must be a positive integer");
        int n = int(c);
        if (n == 1) {
            if (a != b) throw DomainError("single-point grid needs start == stop");
            return {a};
        }
        for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? b : a + (b - a) * i / (n - 1));
        return out;
    }
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(to_d(p));
    if (out.empty()) throw DomainError("empty grid");
    return out;
}

int sweep_threads() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* e = std::getenv("EFFPOT_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && *end == 0 && v > 0) return int(std::min<long>(v, hw));
    }
    return hw;
}

SweepTable run_sweep(const SweepSpec& spec, const SeriesConfig& scfg, const QuadConfig& qcfg, int threads) {
    validate(spec);
    SweepTable t;
    t.spec = spec;
    const int ns = int(spec.strategies.size());
    int ref = -1;
    for (int i = 0; i < ns; ++i)
        if (spec.strategies[i] == Strategy::Quadrature) ref = i;
    for (int i = 0; i < ns; ++i)
        for (int j = i + 1; j < ns; ++j) {
            if (ref < 0) t.pairs.push_back({i, j});
        }
    if (ref >= 0)
        for (int i = 0; i < ns; ++i)
            if (i != ref) t.pairs.push_back({i, ref});

    const int n = int(spec.grid.size());
    t.rows.resize(n);
    int nt = threads > 0 ? threads : sweep_threads();
    nt = std::max(1, std::min(nt, n));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i; (i = next++) < n;) t.rows[i] = compute_row(t, spec.grid[i], scfg, qcfg);
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < nt; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& r : t.rows)
        for (auto& c : r.cells) t.flagged += !c.ok;
    return t;
}

std::string sweep_csv(const SweepTable& t) {
    const auto& st = t.spec.strategies;
    std::ostringstream out;
    out << "abscissa";
    for (Strategy s : st) out << ",strategy:" << to_string(s);
    for (auto [i, j] : t.pairs) out << ",reldiff:" << to_string(st[i]) << "-" << to_string(st[j]);
    for (Strategy s : st) out << ",terms:" << to_string(s);
    out << "\n";
    for (const auto& r : t.rows) {
        out << num(r.abscissa);
        for (const auto& c : r.cells) out << "," << num(c.value);
        for (double v : r.reldiff) out << "," << num(v);
        for (const auto& c : r.cells) out << "," << c.terms;
        out << "\n";
    }
    return out.str();
}

std::string sweep_json(const SweepTable& t) {
    using nlohmann::json;
    const auto& s = t.spec;
    json j;
    j["family"] = to_string(s.family);
    j["d"] = s.d;
    j["scale"] = s.scale;
    j["normalized"] = s.normalize;
    if (s.family == Family::Thermal) j["statistics"] = to_string(s.statistics);
    if (s.family == Family::Compact) j["bc"] = to_string(s.bc);
    if (s.family == Family::Twisted) j["omega"] = s.omega;
    json strategies = json::array();
    for (Strategy st : s.strategies) strategies.push_back(to_string(st));
    j["strategies"] = strategies;
    j["flagged"] = t.flagged;
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row;
        row["abscissa"] = r.abscissa;
        for (size_t k = 0; k < r.cells.size(); ++k) {
            const char* name = to_string(s.strategies[k]);
            const auto& c = r.cells[k];
            row["values"][name] = c.ok ? json(c.value) : json(nullptr);
            row["terms"][name] = c.terms;
            if (!c.ok) row["errors"][name] = c.error;
        }
        for (size_t k = 0; k < t.pairs.size(); ++k) {
            auto [a, b] = t.pairs[k];
            std::string key = std::string(to_string(s.strategies[a])) + "-" + to_string(s.strategies[b]);
            row["reldiff"][key] = std::isnan(r.reldiff[k]) ? json(nullptr) : json(r.reldiff[k]);
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

// ---- convergence --------------------------------------------------------------

namespace {

std::vector<double> highT_terms(const ConvergenceQuery& q, const SeriesConfig& cfg) {
    auto finite = [](const HighTPieces& p) {
        std::vector<double> v;
        for (auto& t : p.terms) v.push_back(t.finite);
        return v;
    };
    auto thermal = [&](Statistics s, double m, double T) {
        if (s == Statistics::Boson) return finite(thermal_highT_pieces(m, T, q.d, cfg));
        std::vector<double> h = finite(thermal_highT_pieces(m, T / 2, q.d, cfg));
        std::vector<double> f = finite(thermal_highT_pieces(m, T, q.d, cfg));
        size_t n = std::max(h.size(), f.size());
        h.resize(n, 0.0);
        f.resize(n, 0.0);
        std::vector<double> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = 2 * h[i] - f[i];
        return v;
    };
    const double m = mass_of(q.family, q.abscissa, q.scale);
    switch (q.family) {
        case Family::Thermal: return thermal(q.statistics, m, q.scale);
        case Family::Compact: {
            auto v = thermal(q.bc == Boundary::Periodic ? Statistics::Boson : Statistics::Fermion, m, 1 / q.scale);
            for (double& x : v) x *= kCompactNormalization;
            return v;
        }
        case Family::Twisted: return finite(twisted_highT_pieces(m, q.scale, q.d, q.omega, cfg));
    }
    return {};
}

double fit_log_slope(const std::vector<double>& terms) {
    std::vector<std::pair<double, double>> pts;
    const int n = int(terms.size());
    for (int i = 0; i < n; ++i) {
        double a = std::fabs(terms[i]);
        if (!(a > 0) || !std::isfinite(a)) continue;
        // isolated near-zeros (cosine weights through a node) would dominate the fit
        double nb = 0;
        if (i > 0) nb = std::max(nb, std::fabs(terms[i - 1]));
        if (i + 1 < n) nb = std::max(nb, std::fabs(terms[i + 1]));
        if (a < 1e-6 * nb) continue;
        pts.push_back({double(i), std::log(a)});
    }
    if (pts.size() < 2) return kNaN;
    size_t from = pts.size() >= 4 ? pts.size() / 2 : 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, k = 0;
    for (size_t i = from; i < pts.size(); ++i) {
        auto [x, y] = pts[i];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        k += 1;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

ConvergenceReport convergence_report(const ConvergenceQuery& q, const SeriesConfig& cfg) {
    if (!(q.abscissa > 0)) throw DomainError("convergence_report: abscissa must be positive");
    ConvergenceReport rep;
    const double m = mass_of(q.family, q.abscissa, q.scale);
    if (q.strategy == Strategy::BesselSeries) {
        switch (q.family) {
            case Family::Thermal:
                rep.partial_sums = thermal_bessel_partial_sums({q.statistics, m, q.scale, q.d}, cfg);
                break;
            case Family::Compact: {
                CompactQuery c{q.bc, m, q.scale, q.d};
                rep.partial_sums = thermal_bessel_partial_sums(thermal_counterpart(c), cfg);
                for (auto& p : rep.partial_sums) p.second *= kCompactNormalization;
                break;
            }
            case Family::Twisted:
                rep.partial_sums = twisted_bessel_partial_sums({m, q.scale, q.d, q.omega}, cfg);
                break;
        }
        double prev = 0;
        for (auto& p : rep.partial_sums) {
            rep.terms.push_back(p.second - prev);
            prev = p.second;
        }
    } else if (q.strategy == Strategy::HighTExpansion) {
        std::vector<double> pieces = highT_terms(q, cfg);
        if (pieces.size() < 3) throw DomainError("convergence_report: no series terms");
        // index l carries the l-th series term; the two leading pieces ride along with l = 0
        double sum = pieces[0] + pieces[1];
        for (size_t l = 2; l < pieces.size(); ++l) {
            sum += pieces[l];
            rep.partial_sums.push_back({int(l - 2), sum});
            rep.terms.push_back(l == 2 ? pieces[0] + pieces[1] + pieces[2] : pieces[l]);
        }
    } else {
        throw DomainError("convergence_report: needs a series strategy (bessel or hight)");
    }
    rep.log_slope = fit_log_slope(rep.terms);
    return rep;
}

// ---- discrepancy ledger -----------------------------------------------------

std::vector<std::string> LedgerReport::flagged() const {
    std::vector<std::string> out;
    for (auto& e : entries)
        if (e.flagged) out.push_back(e.operation);
    return out;
}

namespace {

LedgerEntry make_entry(std::string op, std::string desc, std::string oracle) {
    LedgerEntry e;
    e.operation = std::move(op);
    e.description = std::move(desc);
    e.oracle = std::move(oracle);
    return e;
}

void probe(LedgerEntry& e, std::string point, double printed, double oracle) {
    LedgerProbe p{std::move(point), printed, oracle, rel(printed, oracle)};
    if (!std::isfinite(p.rel)) p.rel = std::numeric_limits<double>::infinity();
    e.max_rel = std::max(e.max_rel, p.rel);
    e.probes.push_back(p);
}

std::string at(const char* a, double x, const char* b, double y) {
    std::ostringstream s;
    s << a << "=" << x << " " << b << "=" << y;
    return s.str();
}

}  // namespace

LedgerReport discrepancy_ledger(const FieldContent* fc) {
    LedgerReport rep;
    const double tol = rep.tolerance;
    const double T = 1;
    const std::vector<double> aT = {0.1, 0.25, 0.5, 0.8};

    using ThermalForm = Transcription (*)(double, double);
    struct TF {
        const char* op;
        const char* desc;
        ThermalForm f;
        Statistics s;
        int d;
    };
    const TF thermal_forms[] = {
        {"thermal_closed_d3_boson", "boson, d = 3, high-temperature closed form", thermal_closed_d3_boson,
         Statistics::Boson, 3},
        {"thermal_closed_d3_fermion", "fermion, d = 3, high-temperature closed form", thermal_closed_d3_fermion,
         Statistics::Fermion, 3},
        {"thermal_closed_d2_boson", "boson, d = 2, finite closed form", thermal_closed_d2_boson,
         Statistics::Boson, 2},
        {"thermal_closed_d2_fermion", "fermion, d = 2, finite closed form", thermal_closed_d2_fermion,
         Statistics::Fermion, 2},
    };
    for (const TF& tf : thermal_forms) {
        LedgerEntry e = make_entry(tf.op, tf.desc, "thermal_quadrature");
        for (double a : aT)
            probe(e, at("m/T", a, "T", T), tf.f(a * T, T).value, thermal_quadrature({tf.s, a * T, T, tf.d}).value);
        rep.entries.push_back(e);
    }

    // compact closed forms carry no 1/2: compare with the thermal value at T = 1/L
    for (int d : {3, 2}) {
        for (Boundary bc : {Boundary::Periodic, Boundary::Antiperiodic}) {
            std::string op = std::string(d == 3 ? "compact_closed_d3" : "compact_closed_d2") + "(" + to_string(bc) + ")";
            LedgerEntry e = make_entry(op, std::string(to_string(bc)) + ", d = " + std::to_string(d) +
                                               ", small-L closed form",
                                       "thermal_quadrature at T = 1/L");
            for (double L : {0.25, 0.5, 1.0})
                for (double mL : {0.1, 0.25, 0.5}) {
                    double m = mL / L;
                    double printed = d == 3 ? compact_closed_d3(bc, m, L).value : compact_closed_d2(bc, m, L).value;
                    CompactQuery cq{bc, m, L, d};
                    probe(e, at("mL", mL, "L", L), printed, thermal_quadrature(thermal_counterpart(cq)).value);
                }
            rep.entries.push_back(e);
        }
    }

    {
        LedgerEntry e = make_entry("twisted_closed_d3", "twisted boundary condition, d = 3, closed form",
                                   "2 x twisted_quadrature");
        for (double w : {0.1, 0.25, 0.4})
            for (double mL : {0.1, 0.5}) {
                std::ostringstream pt;
                pt << "omega=" << w << " mL=" << mL;
                probe(e, pt.str(), twisted_closed_d3(mL, 1, w).value, 2 * twisted_quadrature({mL, 1, 3, w}).value);
            }
        rep.entries.push_back(e);
    }

    {
        LedgerEntry e = make_entry("rs_massless_casimir", "massless bulk scalar between two branes, -3 zeta(5)/(64 pi^4 r_c^4)",
                                   "tower n pi / r_c, zeta-regularized");
        for (double rc : {0.5, 1.0, 2.0}) {
            std::ostringstream pt;
            pt << "r_c=" << rc;
            probe(e, pt.str(), rs_massless_casimir(rc), rs_tower_zeta(rc));
        }
        rep.entries.push_back(e);
    }

    for (Boundary bc : {Boundary::Periodic, Boundary::Antiperiodic}) {
        LedgerEntry e = make_entry(std::string("topological_mass(") + to_string(bc) + ")",
                                   bc == Boundary::Periodic ? "lambda / (24 L^2)" : "-lambda / (48 L^2)",
                                   "second difference of the shifted compact potential");
        for (double L : {0.5, 1.0, 2.0}) probe(e, at("lambda", 1, "L", L), topological_mass(bc, 1, L),
                                                topological_mass_fd(bc, 1, L));
        rep.entries.push_back(e);
    }

    for (auto& e : rep.entries) e.flagged = !(e.max_rel <= tol);

    // models: the zero-temperature piece as printed, ln(m^2/Q^2 - 3/2) without the m^4,
    // against m^4 (ln(m^2/Q^2) - 3/2)
    if (fc) {
        validate(*fc);
        auto add = [&](const char* kind, const std::vector<double>& masses) {
            for (double m : masses) {
                LedgerEntry e = make_entry(std::string("susy_finite_T_potential(") + kind + ")",
                                           "zero-temperature Coleman-Weinberg term as printed",
                                           "m^4 (ln(m^2/Q^2) - 3/2)");
                double x = m * m / (fc->Q * fc->Q);
                double printed = x - 1.5 > 0 ? std::log(x - 1.5) : kNaN;
                double implemented = m == 0 ? 0.0 : std::pow(m, 4) * (std::log(x) - 1.5);
                std::ostringstream pt;
                pt << "m=" << m << " Q=" << fc->Q;
                probe(e, pt.str(), printed, implemented);
                e.flagged = !(e.max_rel <= tol);
                rep.models.push_back(e);
            }
        };
        add("scalar", fc->scalar_masses);
        add("gauge", fc->gauge_masses);
        add("fermion", fc->fermion_masses);
    }
    return rep;
}

std::string ledger_json(const LedgerReport& r) {
    using nlohmann::json;
    auto enc = [](const std::vector<LedgerEntry>& es) {
        json arr = json::array();
        for (auto& e : es) {
            json j;
            j["operation"] = e.operation;
            j["description"] = e.description;
            j["oracle"] = e.oracle;
            j["max_rel"] = std::isfinite(e.max_rel) ? json(e.max_rel) : json(nullptr);
            j["flagged"] = e.flagged;
            json ps = json::array();
            for (auto& p : e.probes)
                ps.push_back({{"point", p.point},
                              {"printed", std::isfinite(p.printed) ? json(p.printed) : json(nullptr)},
                              {"oracle", p.oracle},
                              {"rel", std::isfinite(p.rel) ? json(p.rel) : json(nullptr)}});
            j["probes"] = ps;
            arr.push_back(j);
        }
        return arr;
    };
    json j;
    j["tolerance"] = r.tolerance;
    j["entries"] = enc(r.entries);
    j["models"] = enc(r.models);
    j["flagged"] = r.flagged();
    return j.dump(2) + "\n";
}

}  // namespace effpot
