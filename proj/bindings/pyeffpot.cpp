#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "effpot/compact.hpp"
#include "effpot/errors.hpp"
#include "effpot/harness.hpp"
#include "effpot/models.hpp"
#include "effpot/specfun.hpp"
#include "effpot/thermal.hpp"
#include "effpot/twisted.hpp"

namespace py = pybind11;
using namespace effpot;

namespace {

SeriesConfig series(double rel_tol, int max_terms, int sigma) {
    SeriesConfig c;
    c.rel_tol = rel_tol;
    c.max_terms = max_terms;
    c.sigma = sigma;
    return c;
}

py::dict as_dict(const EvalResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["abs_err_est"] = r.abs_err_est;
    d["terms_used"] = r.terms_used;
    d["strategy"] = to_string(r.strategy);
    d["pole_residual"] = r.pole_residual;
    return d;
}

FieldContent content(std::vector<double> scalars, std::vector<double> gauge, std::vector<double> fermions, double Q,
                     double T) {
    FieldContent fc;
    fc.scalar_masses = std::move(scalars);
    fc.gauge_masses = std::move(gauge);
    fc.fermion_masses = std::move(fermions);
    fc.Q = Q;
    fc.T = T;
    return fc;
}

}  // namespace

PYBIND11_MODULE(_effpot, m) {
    m.doc() = "One-loop effective potentials at finite temperature and on compact spaces";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<DivergenceError>(m, "DivergenceError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<ResidualPoleError>(m, "ResidualPoleError", base.ptr());

    m.def(
        "thermal",
        [](const std::string& stat, double mass, double T, int d, const std::string& strategy, double rel_tol,
           int max_terms, int sigma) {
            PotentialQuery q{parse_statistics(stat), mass, T, d, parse_strategy(strategy)};
            return as_dict(thermal_potential(q, series(rel_tol, max_terms, sigma)));
        },
        py::arg("stat"), py::arg("m"), py::arg("T"), py::arg("d") = 3, py::arg("strategy") = "quadrature",
        py::arg("rel_tol") = 1e-10, py::arg("max_terms") = 10000, py::arg("sigma") = 8);

    m.def(
        "compact",
        [](const std::string& bc, double mass, double L, int d, const std::string& strategy) {
            return as_dict(compact_potential({parse_boundary(bc), mass, L, d, parse_strategy(strategy)}));
        },
        py::arg("bc"), py::arg("m"), py::arg("L"), py::arg("d") = 3, py::arg("strategy") = "quadrature");

    m.def(
        "twisted",
        [](double mass, double L, double omega, int d, const std::string& strategy) {
            return as_dict(twisted_potential({mass, L, d, omega, parse_strategy(strategy)}));
        },
        py::arg("m"), py::arg("L"), py::arg("omega"), py::arg("d") = 3, py::arg("strategy") = "quadrature");

    m.def("topological_mass",
          [](const std::string& bc, double lambda, double L) { return topological_mass(parse_boundary(bc), lambda, L); },
          py::arg("bc"), py::arg("lam"), py::arg("L"));
    m.def("rs_massless_casimir", &rs_massless_casimir, py::arg("r_c"));
    m.def(
        "scherk_schwarz",
        [](double M, double R, int d, double qB, double qF) { return scherk_schwarz_potential(M, R, d, qB, qF); },
        py::arg("M"), py::arg("R"), py::arg("d"), py::arg("qB"), py::arg("qF"));

    m.def(
        "susy",
        [](std::vector<double> s, std::vector<double> g, std::vector<double> f, double Q, double T, double V0) {
            return susy_finite_T_potential(content(std::move(s), std::move(g), std::move(f), Q, T), V0);
        },
        py::arg("scalars") = std::vector<double>{}, py::arg("gauge") = std::vector<double>{},
        py::arg("fermions") = std::vector<double>{}, py::arg("Q") = 1.0, py::arg("T") = 1.0, py::arg("V0") = 0.0);
    m.def(
        "sm_gauge",
        [](std::vector<double> g, double T) { return sm_gauge_one_loop(content({}, std::move(g), {}, 1, T)); },
        py::arg("gauge"), py::arg("T") = 1.0);

    m.def(
        "sweep",
        [](const std::string& family, std::vector<double> grid, std::vector<std::string> strategies,
           const std::string& stat, const std::string& bc, double omega, int d, double scale, bool normalize,
           const std::string& format, int threads) {
            SweepSpec s;
            s.family = parse_family(family);
            s.statistics = parse_statistics(stat);
            s.bc = parse_boundary(bc);
            s.omega = omega;
            s.d = d;
            s.scale = scale;
            s.normalize = normalize;
            s.grid = std::move(grid);
            for (auto& st : strategies) s.strategies.push_back(parse_strategy(st));
            if (format != "csv" && format != "json") throw DomainError("format must be csv or json");
            SweepTable t;
            {
                py::gil_scoped_release nogil;
                t = run_sweep(s, {}, {}, threads);
            }
            return format == "csv" ? sweep_csv(t) : sweep_json(t);
        },
        py::arg("family"), py::arg("grid"), py::arg("strategies") = std::vector<std::string>{"bessel", "hight"},
        py::arg("stat") = "boson", py::arg("bc") = "periodic", py::arg("omega") = 0.25, py::arg("d") = 3,
        py::arg("scale") = 1.0, py::arg("normalize") = true, py::arg("format") = "csv", py::arg("threads") = 0);

    m.def(
        "convergence",
        [](const std::string& family, double abscissa, const std::string& strategy, const std::string& stat,
           const std::string& bc, double omega, int d, double scale) {
            ConvergenceQuery q;
            q.family = parse_family(family);
            q.statistics = parse_statistics(stat);
            q.bc = parse_boundary(bc);
            q.omega = omega;
            q.d = d;
            q.scale = scale;
            q.strategy = parse_strategy(strategy);
            q.abscissa = abscissa;
            ConvergenceReport r = convergence_report(q);
            py::dict out;
            out["partial_sums"] = r.partial_sums;
            out["terms"] = r.terms;
            out["log_slope"] = r.log_slope;
            return out;
        },
        py::arg("family"), py::arg("abscissa"), py::arg("strategy") = "bessel", py::arg("stat") = "boson",
        py::arg("bc") = "periodic", py::arg("omega") = 0.25, py::arg("d") = 3, py::arg("scale") = 1.0);

    m.def("ledger_json", []() { return ledger_json(discrepancy_ledger()); });

    m.def("invariants", []() {
        py::list out;
        for (auto& r : run_invariants()) out.append(py::make_tuple(r.name, r.passed, r.detail));
        return out;
    });
}
