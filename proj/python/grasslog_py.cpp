#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grasslog/config_io.hpp"
#include "grasslog/grassmannian.hpp"
#include "grasslog/polylog.hpp"
#include "grasslog/quadrature.hpp"
#include "grasslog/verify.hpp"

namespace py = pybind11;
using namespace grasslog;

namespace {

ConfigurationF config_from_json_str(const std::string& text) {
    AnyConfiguration any = configuration_from_json(Json::parse(text));
    if (std::holds_alternative<ConfigurationF>(any)) return std::get<ConfigurationF>(any);
    return to_float(std::get<ConfigurationQ>(any));
}

py::dict estimate_dict(const QuadratureEstimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["sigma"] = e.sigma;
    d["samples"] = e.samples;
    d["method"] = e.method;
    d["orientation"] = e.orientation;
    d["budget_exceeded"] = e.budget_exceeded;
    return d;
}

} // namespace

PYBIND11_MODULE(_grasslog, m) {
    m.doc() = "Grassmannian di- and trilogarithms: closed forms, singular "
              "integration over CP^1/CP^2, identity verification";

    py::register_exception<DegenerateError>(m, "DegenerateError");
    py::register_exception<NonGenericError>(m, "NonGenericError");
    py::register_exception<CutError>(m, "CutError");

    m.def("li", &li, py::arg("n"), py::arg("z"),
          "Principal-branch classical polylogarithm Li_n, n in {1,2,3}");
    m.def("bloch_wigner", &bloch_wigner, py::arg("z"), "Bloch-Wigner dilogarithm D(z)");
    m.def("sv_trilog", &sv_trilog, py::arg("z"), "Single-valued trilogarithm L3(z)");

    m.def(
        "cross_ratio",
        [](const std::string& config_json) { return cross_ratio(config_from_json_str(config_json)); },
        py::arg("config_json"));
    m.def(
        "triple_ratio_arg",
        [](const std::string& config_json) {
            return triple_ratio_arg(config_from_json_str(config_json));
        },
        py::arg("config_json"));

    m.def(
        "grass_dilog",
        [](const std::string& config_json, const std::string& method, long long budget, double tol) {
            DilogMode mode = method == "numeric"  ? DilogMode::numeric
                             : method == "both"   ? DilogMode::both
                                                  : DilogMode::closed;
            DilogResult r = grass_dilog(config_from_json_str(config_json), mode, budget, tol);
            py::dict d;
            if (mode != DilogMode::numeric) d["closed"] = r.closed;
            if (r.numeric) d["numeric"] = estimate_dict(*r.numeric);
            return d;
        },
        py::arg("config_json"), py::arg("method") = "closed", py::arg("budget") = 100000,
        py::arg("tol") = 1e-6);

    m.def(
        "grass_trilog",
        [](const std::string& config_json, bool numeric, long long budget, std::uint64_t seed) {
            ConfigurationF cf = config_from_json_str(config_json);
            TrilogReport rep = grass_trilog_closed(cf);
            py::dict d;
            d["closed"] = rep.closed;
            d["lie"] = rep.lie;
            d["diff_term"] = rep.diff_term;
            if (numeric) {
                Cp2Integrand intg;
                intg.covectors = cf.vectors();
                QuadratureEstimate est = integrate_cp2(intg, budget, seed);
                double scale = 2.0 / (3.0 * M_PI * M_PI) * orientation_tag();
                py::dict n = estimate_dict(est);
                n["value"] = est.value * scale;
                n["sigma"] = est.sigma * std::fabs(scale);
                d["numeric"] = n;
            }
            return d;
        },
        py::arg("config_json"), py::arg("numeric") = false, py::arg("budget") = 5000000,
        py::arg("seed") = 42);

    m.def(
        "special_config",
        [](std::complex<double> z) {
            return configuration_to_json(special_config(GaussianRational(
                                             Rational::from_double(z.real()),
                                             Rational::from_double(z.imag()))))
                .dump();
        },
        py::arg("z"), "Special 6-point configuration as exact-backend JSON");

    m.def(
        "special_stratum_value",
        [](std::complex<double> z, std::vector<double> epsilons) {
            GaussianRational zq(Rational::from_double(z.real()), Rational::from_double(z.imag()));
            if (epsilons.empty()) epsilons = {8e-3, 4e-3, 2e-3, 1e-3};
            return special_stratum_value(zq, epsilons);
        },
        py::arg("z"), py::arg("epsilons") = std::vector<double>{});

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed, long long budget) {
            VerifyOptions opts;
            opts.seed = seed;
            if (budget > 0) {
                opts.budget_cp1 = std::min<long long>(budget, 400000);
                opts.budget_cp2 = budget;
            }
            return run_suite(suite, opts).dump(2);
        },
        py::arg("suite") = "exact", py::arg("seed") = 42, py::arg("budget") = -1,
        "Run a verification suite; returns the JSON report as a string");

    m.attr("ZETA3") = kZeta3;
    m.attr("__version__") = "0.1.0";
    m.attr("convention") = normalization_convention();
}
