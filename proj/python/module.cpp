#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcfrac/serialize.hpp"

namespace py = pybind11;
using namespace mcfrac;

namespace {

DerivationReport derive_for(const std::string& family, int depth, bool uncertified) {
    return derive(Family::of(family_from_name(family)), depth, uncertified);
}

std::pair<std::string, std::string> endpoints(const Enclosure& e, int digits = 40) {
    return {e.lo().to_string(digits), e.hi().to_string(digits)};
}

}  // namespace

PYBIND11_MODULE(_mcfrac, m) {
    m.doc() =
        "Continued-fraction corrections for the Landau, Lebesgue and "
        "Euler-Mascheroni constants: exact coefficient derivation, "
        "arbitrary-precision evaluation and certified inequality checks.";

    m.def(
        "derive_json",
        [](const std::string& family, int depth, bool uncertified, int bits) {
            return derivation_to_json(derive_for(family, depth, uncertified), bits);
        },
        py::arg("family"), py::arg("depth"), py::arg("uncertified") = false,
        py::arg("bits") = 192,
        "Derive correction coefficients; returns the canonical JSON document.");

    m.def(
        "evaluate_cf",
        [](const std::string& family, int depth, long n, bool uncertified) {
            auto rep = derive_for(family, depth, uncertified);
            return cf_evaluate_exact(rep.cf, Rational(n)).to_string();
        },
        py::arg("family"), py::arg("depth"), py::arg("n"), py::arg("uncertified") = false,
        "Exact value of MC_k(n) as a canonical Q(pi) string.");

    m.def(
        "error_term",
        [](const std::string& family, int depth, long n, int bits) {
            auto rep = derive_for(family, depth, false);
            return endpoints(error_term(rep.cf, n, bits));
        },
        py::arg("family"), py::arg("depth"), py::arg("n"), py::arg("bits") = 192,
        "Enclosure of E_k(n) as a (lo, hi) pair of decimal strings.");

    m.def(
        "verify_theorem_json",
        [](const std::string& theorem, long n_max, int bits) {
            CheckOptions opts;
            opts.prec = bits;
            InequalityReport report;
            if (theorem == "landau-thm2")
                report = check_theorem2(n_max, derive_for("landau", 2, false), opts);
            else if (theorem == "lebesgue-thm4")
                report = check_theorem4(n_max, derive_for("lebesgue", 1, false), opts);
            else if (theorem == "landau-monotone")
                report = check_monotone_decreasing(derive_for("landau", 2, false), n_max, opts);
            else if (theorem == "lebesgue-monotone")
                report = check_monotone_decreasing(derive_for("lebesgue", 1, false), n_max, opts);
            else
                throw std::invalid_argument("unknown theorem '" + theorem + "'");
            return inequality_to_json(report);
        },
        py::arg("theorem"), py::arg("n_max"), py::arg("bits") = 192);

    m.def(
        "rate_json",
        [](const std::string& family, int depth, long n_max, int bits) {
            auto rep = derive_for(family, depth, false);
            std::vector<long> schedule;
            for (long n = std::max<long>(16, n_max / 16); n <= n_max; n *= 2)
                schedule.push_back(n);
            return rate_fit_to_json(rate_fit(rep, schedule, bits));
        },
        py::arg("family"), py::arg("depth"), py::arg("n_max") = 1024, py::arg("bits") = 192);

    m.def(
        "const_c0", [](int bits) { return endpoints(const_c0(bits)); }, py::arg("bits") = 192);
    m.def(
        "const_c1",
        [](int bits, const std::string& mode) {
            return endpoints(
                const_c1(bits, mode == "literal" ? C1Mode::Literal : C1Mode::Accelerated));
        },
        py::arg("bits") = 192, py::arg("mode") = "accelerated");
    m.def(
        "euler_gamma", [](int bits) { return endpoints(gamma_reference(bits)); },
        py::arg("bits") = 192);

    m.def(
        "landau_g", [](int n) { return landau_G(n).to_string(); }, py::arg("n"),
        "Exact G(n) as a rational string.");
    m.def(
        "harmonic", [](int n) { return harmonic(n).to_string(); }, py::arg("n"));
    m.def(
        "bernoulli", [](int n) { return bernoulli(n).to_string(); }, py::arg("n"));
    m.def(
        "brouncker_q",
        [](int k, const std::string& n) {
            return brouncker_qk_value(k, Rational::from_string(n)).to_string();
        },
        py::arg("k"), py::arg("n"), "Exact k-term truncation value at rational n.");
    m.def(
        "lebesgue_quadrature",
        [](int n, double tol, int bits) { return endpoints(lebesgue_quadrature(n, tol, bits)); },
        py::arg("n"), py::arg("tol") = 1e-10, py::arg("bits") = 128);
    m.def(
        "lebesgue_bounds",
        [](int n, int terms, int bits) {
            return endpoints(lebesgue_enclosure(n, terms, bits));
        },
        py::arg("n"), py::arg("terms") = 2, py::arg("bits") = 128,
        "Two-sided Bernoulli-series bounds on L_{n/2}.");
}
