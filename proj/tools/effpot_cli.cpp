#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "effpot/compact.hpp"
#include "effpot/errors.hpp"
#include "effpot/harness.hpp"
#include "effpot/models.hpp"
#include "effpot/thermal.hpp"
#include "effpot/twisted.hpp"

using namespace effpot;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kBadArgs = 2, kComputeError = 3;

// argument problems found after parsing (enum spellings, module preconditions)
struct BadArgs : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

json jnum(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

struct Common {
    std::string format = "csv";
    std::string out;
    SeriesConfig scfg;
    QuadConfig qcfg;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app->add_option("--out", c.out, "write output to this path instead of stdout");
    app->add_option("--rel-tol", c.scfg.rel_tol, "series truncation tolerance")->check(CLI::PositiveNumber);
    app->add_option("--max-terms", c.scfg.max_terms, "series term cap")->check(CLI::PositiveNumber);
    app->add_option("--sigma", c.scfg.sigma, "high-temperature truncation order")->check(CLI::NonNegativeNumber);
    app->add_option("--quad-tol", c.qcfg.rel_tol, "quadrature relative tolerance")->check(CLI::PositiveNumber);
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw BadArgs("cannot open output file '" + c.out + "'");
    f << text;
}

template <class F>
auto parse_arg(F f, const std::string& s) {
    try {
        return f(s);
    } catch (const DomainError& e) {
        throw BadArgs(e.what());
    }
}

// preconditions are argument errors, everything after them is a computation error
template <class Q>
void check_query(const Q& q) {
    try {
        validate(q);
    } catch (const DomainError& e) {
        throw BadArgs(e.what());
    }
}

std::string record(const Common& c, const EvalResult& r, const Diagnostics& diag) {
    if (c.format == "json") {
        json j = {{"value", jnum(r.value)},
                  {"abs_err_est", jnum(r.abs_err_est)},
                  {"terms_used", r.terms_used},
                  {"strategy", to_string(r.strategy)},
                  {"pole_residual", jnum(r.pole_residual)},
                  {"warnings", diag.warnings}};
        return j.dump(2) + "\n";
    }
    for (auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
    return "value,abs_err_est,terms_used,strategy,pole_residual\n" + num(r.value) + "," + num(r.abs_err_est) +
           "," + std::to_string(r.terms_used) + "," + to_string(r.strategy) + "," + num(r.pole_residual) + "\n";
}

std::vector<Strategy> parse_strategies(const std::string& s) {
    std::vector<Strategy> out;
    std::stringstream ss(s);
    for (std::string t; std::getline(ss, t, ',');) out.push_back(parse_arg(parse_strategy, t));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-loop effective potentials at finite temperature and on S^1 x R^d"};
    app.require_subcommand(1);

    // thermal
    Common tc;
    std::string t_stat = "boson", t_strategy = "quadrature";
    PotentialQuery tq;
    auto* thermal = app.add_subcommand("thermal", "temperature-dependent potential");
    thermal->add_option("--stat", t_stat, "boson|fermion");
    thermal->add_option("--m", tq.m, "mass")->required();
    thermal->add_option("--T", tq.T, "temperature")->required();
    thermal->add_option("--d", tq.d, "spatial dimension (2..5)");
    thermal->add_option("--strategy", t_strategy, "quadrature|bessel|hight|closed");
    add_common(thermal, tc);

    // compact
    Common cc;
    std::string c_bc = "periodic", c_strategy = "quadrature";
    CompactQuery cq;
    auto* compact = app.add_subcommand("compact", "potential on S^1 x R^d");
    compact->add_option("--bc", c_bc, "periodic|antiperiodic");
    compact->add_option("--m", cq.m, "mass")->required();
    compact->add_option("--L", cq.L, "circumference")->required();
    compact->add_option("--d", cq.d, "spatial dimension (2..5)");
    compact->add_option("--strategy", c_strategy, "quadrature|bessel|hight|closed");
    add_common(compact, cc);

    // twisted
    Common wc;
    std::string w_strategy = "quadrature";
    TwistQuery wq;
    auto* twisted = app.add_subcommand("twisted", "potential with twisted boundary conditions");
    twisted->add_option("--m", wq.m, "mass")->required();
    twisted->add_option("--L", wq.L, "circumference")->required();
    twisted->add_option("--omega", wq.omega, "twist in [0, 1)")->required();
    twisted->add_option("--d", wq.d, "spatial dimension (2..5)");
    twisted->add_option("--strategy", w_strategy, "quadrature|bessel|hight|closed");
    add_common(twisted, wc);

    // models
    Common mc;
    std::string m_kind = "susy";
    FieldContent fc;
    double V0 = 0;
    auto* models = app.add_subcommand("models", "composite SUSY / Standard-Model potentials");
    models->add_option("--kind", m_kind, "susy|sm")->check(CLI::IsMember({"susy", "sm"}));
    models->add_option("--scalars", fc.scalar_masses, "scalar masses")->delimiter(',');
    models->add_option("--gauge", fc.gauge_masses, "gauge boson masses")->delimiter(',');
    models->add_option("--fermions", fc.fermion_masses, "fermion masses")->delimiter(',');
    models->add_option("--Q", fc.Q, "renormalization scale");
    models->add_option("--T", fc.T, "temperature");
    models->add_option("--V0", V0, "tree-level potential");
    add_common(models, mc);

    // sweep
    Common sc;
    SweepSpec ss;
    std::string s_family = "thermal", s_stat = "boson", s_bc = "periodic", s_grid, s_strategies = "bessel,hight";
    bool s_raw = false;
    int s_threads = 0;
    auto* sweep = app.add_subcommand("sweep", "strategy comparison over an m/T or mL grid");
    sweep->add_option("--family", s_family, "thermal|compact|twisted");
    sweep->add_option("--stat", s_stat, "boson|fermion (thermal)");
    sweep->add_option("--bc", s_bc, "periodic|antiperiodic (compact)");
    sweep->add_option("--omega", ss.omega, "twist (twisted)");
    sweep->add_option("--d", ss.d, "spatial dimension (2..5)");
    sweep->add_option("--scale", ss.scale, "T (thermal) or L (compact, twisted)");
    sweep->add_option("--grid", s_grid, "start:stop:count or a comma list")->required();
    sweep->add_option("--strategies", s_strategies, "comma list of strategies");
    sweep->add_flag("--raw", s_raw, "report V instead of V / m^{d+1}");
    sweep->add_option("--threads", s_threads, "worker threads (default EFFPOT_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    add_common(sweep, sc);

    // convergence
    Common vc;
    ConvergenceQuery cvq;
    std::string v_family = "thermal", v_stat = "boson", v_bc = "periodic", v_strategy = "bessel";
    auto* conv = app.add_subcommand("convergence", "partial sums of a series strategy");
    conv->add_option("--family", v_family, "thermal|compact|twisted");
    conv->add_option("--stat", v_stat, "boson|fermion (thermal)");
    conv->add_option("--bc", v_bc, "periodic|antiperiodic (compact)");
    conv->add_option("--omega", cvq.omega, "twist (twisted)");
    conv->add_option("--d", cvq.d, "spatial dimension (2..5)");
    conv->add_option("--scale", cvq.scale, "T (thermal) or L (compact, twisted)");
    conv->add_option("--x", cvq.abscissa, "m/T or mL")->required();
    conv->add_option("--strategy", v_strategy, "bessel|hight");
    add_common(conv, vc);

    // validate
    Common ac;
    auto* validate_cmd = app.add_subcommand("validate", "invariant suite and discrepancy ledger");
    add_common(validate_cmd, ac);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadArgs;
    }

    try {
        if (*thermal) {
            tq.statistics = parse_arg(parse_statistics, t_stat);
            tq.strategy = parse_arg(parse_strategy, t_strategy);
            check_query(tq);
            Diagnostics diag;
            emit(tc, record(tc, thermal_potential(tq, tc.scfg, tc.qcfg, &diag), diag));
        } else if (*compact) {
            cq.bc = parse_arg(parse_boundary, c_bc);
            cq.strategy = parse_arg(parse_strategy, c_strategy);
            PotentialQuery counterpart;
            try {
                counterpart = thermal_counterpart(cq);
            } catch (const DomainError& e) {
                throw BadArgs(e.what());
            }
            check_query(counterpart);
            Diagnostics diag;
            emit(cc, record(cc, compact_potential(cq, cc.scfg, cc.qcfg, &diag), diag));
        } else if (*twisted) {
            wq.strategy = parse_arg(parse_strategy, w_strategy);
            check_query(wq);
            Diagnostics diag;
            emit(wc, record(wc, twisted_potential(wq, wc.scfg, wc.qcfg, &diag), diag));
        } else if (*models) {
            check_query(fc);
            if (m_kind == "susy") {
                double zero = susy_zero_T_part(fc), th = susy_thermal_part(fc, mc.qcfg);
                double v = susy_finite_T_potential(fc, V0, mc.qcfg);
                if (mc.format == "json")
                    emit(mc, json{{"kind", "susy"}, {"value", v}, {"zero_T_part", zero}, {"thermal_part", th}}.dump(2) + "\n");
                else
                    emit(mc, "kind,value,zero_T_part,thermal_part\nsusy," + num(v) + "," + num(zero) + "," + num(th) + "\n");
            } else {
                if (fc.gauge_masses.empty()) throw BadArgs("sm needs at least one --gauge mass");
                double v = sm_gauge_one_loop(fc, mc.qcfg);
                if (mc.format == "json")
                    emit(mc, json{{"kind", "sm"}, {"value", v}}.dump(2) + "\n");
                else
                    emit(mc, "kind,value\nsm," + num(v) + "\n");
            }
        } else if (*sweep) {
            ss.family = parse_arg(parse_family, s_family);
            ss.statistics = parse_arg(parse_statistics, s_stat);
            ss.bc = parse_arg(parse_boundary, s_bc);
            ss.grid = parse_arg(parse_grid, s_grid);
            ss.strategies = parse_strategies(s_strategies);
            ss.normalize = !s_raw;
            check_query(ss);
            SweepTable t = run_sweep(ss, sc.scfg, sc.qcfg, s_threads);
            if (t.flagged) std::cerr << "warning: " << t.flagged << " cell(s) raised; see the errors\n";
            emit(sc, sc.format == "json" ? sweep_json(t) : sweep_csv(t));
        } else if (*conv) {
            cvq.family = parse_arg(parse_family, v_family);
            cvq.statistics = parse_arg(parse_statistics, v_stat);
            cvq.bc = parse_arg(parse_boundary, v_bc);
            cvq.strategy = parse_arg(parse_strategy, v_strategy);
            if (cvq.strategy != Strategy::BesselSeries && cvq.strategy != Strategy::HighTExpansion)
                throw BadArgs("convergence needs --strategy bessel or hight");
            if (cvq.d < 2 || cvq.d > 5) throw BadArgs("spatial dimension must be 2, 3, 4 or 5");
            ConvergenceReport r = convergence_report(cvq, vc.scfg);
            if (vc.format == "json") {
                json rows = json::array();
                for (size_t i = 0; i < r.partial_sums.size(); ++i)
                    rows.push_back({{"index", r.partial_sums[i].first},
                                    {"partial_sum", r.partial_sums[i].second},
                                    {"term", r.terms[i]}});
                emit(vc, json{{"rows", rows}, {"log_slope", jnum(r.log_slope)}}.dump(2) + "\n");
            } else {
                std::string s = "index,partial_sum,term\n";
                for (size_t i = 0; i < r.partial_sums.size(); ++i)
                    s += std::to_string(r.partial_sums[i].first) + "," + num(r.partial_sums[i].second) + "," +
                         num(r.terms[i]) + "\n";
                s += "# log_slope," + num(r.log_slope) + "\n";
                emit(vc, s);
            }
        } else if (*validate_cmd) {
            auto inv = run_invariants();
            LedgerReport led = discrepancy_ledger();
            bool all = true;
            for (auto& r : inv) all = all && r.passed;
            if (ac.format == "json") {
                json ji = json::array();
                for (auto& r : inv) ji.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                json j = {{"invariants", ji}, {"all_passed", all}, {"ledger", json::parse(ledger_json(led))}};
                emit(ac, j.dump(2) + "\n");
            } else {
                std::string s = "kind,name,status,detail\n";
                for (auto& r : inv)
                    s += "invariant,\"" + r.name + "\"," + (r.passed ? "pass" : "fail") + ",\"" + r.detail + "\"\n";
                for (auto& e : led.entries)
                    s += "ledger,\"" + e.operation + "\"," + (e.flagged ? "flagged" : "agrees") + ",max_rel " +
                         num(e.max_rel) + "\n";
                emit(ac, s);
            }
            return all ? kOk : 1;
        }
    } catch (const BadArgs& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArgs;
    } catch (const ResidualPoleError& e) {
        std::cerr << "error (ResidualPoleError): " << e.what() << "\n";
        return kComputeError;
    } catch (const ConvergenceError& e) {
        std::cerr << "error (ConvergenceError): " << e.what() << "\n";
        return kComputeError;
    } catch (const DivergenceError& e) {
        std::cerr << "error (DivergenceError): " << e.what() << "\n";
        return kComputeError;
    } catch (const PoleError& e) {
        std::cerr << "error (PoleError): " << e.what() << "\n";
        return kComputeError;
    } catch (const DomainError& e) {
        std::cerr << "error (DomainError): " << e.what() << "\n";
        return kComputeError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kComputeError;
    }
    return kOk;
}
