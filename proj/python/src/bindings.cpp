#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kpztail/asymptotics.hpp"
#include "kpztail/equilibrium.hpp"
#include "kpztail/fredholm.hpp"
#include "kpztail/kernels.hpp"

namespace py = pybind11;
using namespace kpztail;

namespace {

Precision parse_precision(const std::string& p) {
    if (p == "standard") return Precision::standard;
    if (p == "extended") return Precision::extended;
    throw DomainError("precision must be 'standard' or 'extended'");
}

KernelRep parse_rep(const std::string& r) {
    if (r == "sigma") return KernelRep::SigmaWeighted;
    if (r == "finite-t") return KernelRep::FiniteTemperature;
    throw DomainError("rep must be 'sigma' or 'finite-t'");
}

py::dict breakdown_to_dict(const AsymptoticBreakdown& b) {
    py::dict terms;
    for (const auto& [name, value] : b.terms) terms[py::str(name)] = value;
    py::dict out;
    out["terms"] = terms;
    out["total"] = b.total;
    return out;
}

} // namespace

PYBIND11_MODULE(_kpztail, m) {
    m.doc() = "Deformed-Airy-kernel Fredholm determinants for the KPZ lower tail";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SpectrumOutOfRange>(m, "SpectrumOutOfRange");
    py::register_exception<TruncationTooTight>(m, "TruncationTooTight");
    py::register_exception<RangeExceeded>(m, "RangeExceeded");
    py::register_exception<NoConvergence>(m, "NoConvergence");
    py::register_exception<DominanceNotEstablished>(m, "DominanceNotEstablished");
    py::register_exception<QuadratureFailure>(m, "QuadratureFailure");

    m.def("fermi", &fermi, py::arg("r"), "Fermi factor 1/(1+e^{-r})");

    m.def(
        "airy",
        [](double x) {
            auto p = airy_eval(x);
            return py::make_tuple(p.ai, p.ai_prime);
        },
        py::arg("x"), "(Ai(x), Ai'(x))");

    m.def("airy_kernel", &airy_kernel, py::arg("u"), py::arg("v"),
          "Airy kernel with analytic diagonal limit");

    m.def(
        "log_q",
        [](double s, double T, const std::string& rep, int order, const std::string& precision) {
            auto r = log_q(Params(s, T), parse_rep(rep), order, parse_precision(precision));
            py::dict d;
            d["log_q"] = r.log_det;
            d["order"] = r.order;
            d["rep"] = rep;
            d["error_estimate"] = r.error_estimate;
            return d;
        },
        py::arg("s"), py::arg("T"), py::arg("rep") = "sigma", py::arg("order") = 80,
        py::arg("precision") = "standard",
        "log Q(s,T) by Nystrom discretization of the Fredholm determinant");

    m.def(
        "tracy_widom_log_cdf",
        [](double x, int order, const std::string& precision) {
            return tracy_widom_log_cdf(x, order, parse_precision(precision));
        },
        py::arg("x"), py::arg("order") = 80, py::arg("precision") = "standard",
        "log F^TW(x), the Tracy-Widom GUE log-CDF");

    m.def(
        "dlog_q_ds",
        [](double s, double T, double h, const std::string& rep, int order,
           const std::string& precision) {
            return dlog_q_ds(Params(s, T), h, parse_rep(rep), order, parse_precision(precision));
        },
        py::arg("s"), py::arg("T"), py::arg("h") = 0.0, py::arg("rep") = "finite-t",
        py::arg("order") = 80, py::arg("precision") = "standard");

    m.def(
        "dlog_q_dT",
        [](double s, double T, double h, const std::string& rep, int order,
           const std::string& precision) {
            return dlog_q_dT(Params(s, T), h, parse_rep(rep), order, parse_precision(precision));
        },
        py::arg("s"), py::arg("T"), py::arg("h") = 0.0, py::arg("rep") = "finite-t",
        py::arg("order") = 80, py::arg("precision") = "standard");

    m.def(
        "convergence_scan",
        [](double s, double T, const std::string& rep, const std::vector<int>& orders,
           const std::string& precision) {
            auto rows =
                convergence_scan(Params(s, T), parse_rep(rep), orders, parse_precision(precision));
            py::list out;
            for (const auto& row : rows) {
                py::dict d;
                d["order"] = row.order;
                d["log_det"] = row.log_det;
                d["error_estimate"] = row.error_estimate;
                out.append(d);
            }
            return out;
        },
        py::arg("s"), py::arg("T"), py::arg("rep"), py::arg("orders"),
        py::arg("precision") = "standard");

    py::class_<EquilibriumData>(m, "EquilibriumData")
        .def_readonly("lambda0", &EquilibriumData::lambda0)
        .def_readonly("residual", &EquilibriumData::residual)
        .def_readonly("w_at_endpoint", &EquilibriumData::w_at_endpoint)
        .def("psi", [](const EquilibriumData& eq, double lam) { return psi(lam, eq); },
             py::arg("lam"), "density-side quantity 2 sqrt(lambda0-lam) w(lam)")
        .def("w", [](const EquilibriumData& eq, double lam) { return w_at(lam, eq); },
             py::arg("lam"), "edge weight w(lam)")
        .def("g_combination",
             [](const EquilibriumData& eq, double lam) { return g_combination(lam, eq); },
             py::arg("lam"), "2g - V + V(lambda0) for lam > lambda0");

    m.def(
        "solve_lambda0",
        [](double s, double T, double tol) { return solve_lambda0(Params(s, T), tol); },
        py::arg("s"), py::arg("T"), py::arg("tol") = 1e-12,
        "equilibrium endpoint lambda0 with residual and edge weight");

    m.def(
        "lambda0_asymptotic",
        [](double s, double T) { return lambda0_asymptotic(Params(s, T)); }, py::arg("s"),
        py::arg("T"));

    m.def(
        "potential_v", [](double lam, double s, double T) { return potential_v(lam, Params(s, T)); },
        py::arg("lam"), py::arg("s"), py::arg("T"));

    m.def("step_lemma_error", &step_lemma_error, py::arg("F"), py::arg("half_line_integral"),
          py::arg("r"), "step-approximation error of the Fermi factor at scale r");

    m.def("rate_phi", &rate_phi, py::arg("y"), "large-deviation rate function phi(y)");
    m.def("zeta_prime_minus_one", [] { return kZetaPrimeMinusOne; });
    m.def(
        "naive_estimate", [](double s, double T) { return naive_estimate(Params(s, T)); },
        py::arg("s"), py::arg("T"));

    m.def(
        "log_q_asymptotic",
        [](double s, double T) { return breakdown_to_dict(log_q_asymptotic(Params(s, T))); },
        py::arg("s"), py::arg("T"));
    m.def(
        "log_q_expansion_fixed_T",
        [](double s, double T) { return breakdown_to_dict(log_q_expansion_fixed_T(Params(s, T))); },
        py::arg("s"), py::arg("T"));
    m.def(
        "tw_tail_expansion", [](double s) { return breakdown_to_dict(tw_tail_expansion(s)); },
        py::arg("s"));
    m.def(
        "dlogq_ds_asymptotic",
        [](double s, double T) { return breakdown_to_dict(dlogq_ds_asymptotic(Params(s, T))); },
        py::arg("s"), py::arg("T"));
    m.def(
        "dlogq_dT_asymptotic",
        [](double s, double T) { return breakdown_to_dict(dlogq_dT_asymptotic(Params(s, T))); },
        py::arg("s"), py::arg("T"));

    m.def(
        "kpz_tail_bracket",
        [](double s, double T, double epsilon,
           const std::function<double(double, double)>& q_eval) {
            auto b = kpz_tail_bracket(Params(s, T), epsilon, q_eval);
            py::dict d;
            d["lower_A"] = b.lower_A;
            d["upper_B"] = b.upper_B;
            d["s_tilde"] = b.s_tilde;
            d["epsilon"] = b.epsilon;
            return d;
        },
        py::arg("s"), py::arg("T"), py::arg("epsilon"), py::arg("q_eval"),
        "bracket [A, B] on log P(Upsilon_T < -s); q_eval(s, T) supplies log Q");
}
