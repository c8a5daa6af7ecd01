#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "qtmoments/cards.hpp"
#include "qtmoments/cfrac.hpp"
#include "qtmoments/orthopoly.hpp"
#include "qtmoments/partitions.hpp"
#include "qtmoments/qtnum.hpp"
#include "qtmoments/verify.hpp"

namespace py = pybind11;
using namespace qtmoments;

namespace {

NestingMode mode_from(const std::string& s)
{
    if (s == "strict") return NestingMode::Strict;
    if (s == "covered") return NestingMode::CoveredSingleton;
    throw py::value_error("mode must be 'strict' or 'covered'");
}

ScalarGauge gauge_for(const std::string& mode, const std::string& gauge)
{
    if (gauge.empty()) return mode_from(mode) == NestingMode::Strict ? ScalarGauge::Identity : ScalarGauge::TPowerN;
    if (gauge == "identity") return ScalarGauge::Identity;
    if (gauge == "tpower") return ScalarGauge::TPowerN;
    throw py::value_error("gauge must be 'identity' or 'tpower'");
}

Method method_from(const std::string& s)
{
    for (Method m : all_methods()) {
        if (s == to_string(m)) return m;
    }
    throw py::value_error("unknown method '" + s + "'");
}

JacobiParams preset_from(const std::string& s)
{
    if (s == "charlier-strict") return charlier_strict();
    if (s == "charlier-tgauge") return charlier_tgauge();
    if (s == "q-charlier") return q_charlier();
    if (s == "ejsmont") return ejsmont();
    throw py::value_error("unknown preset '" + s + "'");
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_qtmoments, m)
{
    m.doc() = "Exact moments of the (q,t)-Poisson model";

    py::register_exception<Error>(m, "QtMomentsError", PyExc_ValueError);

    m.def("moment", [](int n, const std::string& method, const std::string& mode, const std::string& gauge, unsigned workers) {
        py::gil_scoped_release release;
        return moment_via(method_from(method), n, mode_from(mode), gauge_for(mode, gauge), workers).to_string();
    }, py::arg("n"), py::arg("method") = "partitions", py::arg("mode") = "strict", py::arg("gauge") = "",
       py::arg("workers") = 1, "Canonical string of m_n through one route.");

    m.def("evaluate", [](const std::string& poly, const std::map<std::string, std::string>& at) {
        Assignment a;
        for (const auto& [name, value] : at) a[var_from_name(name)] = parse_rational(value);
        return to_string(parse_polynomial(poly).evaluate(a));
    }, py::arg("poly"), py::arg("at"), "Exact value of a polynomial; values and result are 'a/b' strings.");

    m.def("canonical", [](const std::string& poly) { return parse_polynomial(poly).to_string(); }, py::arg("poly"));

    m.def("qt_number", [](unsigned n) { return qt_number(n).to_string(); }, py::arg("n"));
    m.def("qt_factorial", [](unsigned n) { return qt_factorial(n).to_string(); }, py::arg("n"));

    m.def("partitions", [](int n) {
        std::vector<py::dict> out;
        enumerate_partitions(n, [&](const SetPartition& p) {
            py::dict d;
            d["rgs"] = p.rgs();
            d["blocks"] = p.block_count();
            d["rc"] = restricted_crossings(p);
            d["rn_strict"] = restricted_nestings(p, NestingMode::Strict);
            d["rn_covered"] = restricted_nestings(p, NestingMode::CoveredSingleton);
            out.push_back(std::move(d));
        });
        return out;
    }, py::arg("n"));

    m.def("contributors", [](int n) {
        std::vector<std::string> out;
        for (const auto& w : contributors(n)) out.push_back(w.to_string());
        return out;
    }, py::arg("n"));

    m.def("arrangements", [](const std::string& word, const std::string& gauge) {
        std::vector<py::dict> out;
        for (const auto& a : expand_arrangements(OperatorWord::parse(word), gauge_for("strict", gauge))) {
            std::vector<std::string> cards;
            for (const auto& c : a.cards) cards.push_back(c.label());
            py::dict d;
            d["word"] = a.word.to_string();
            d["cards"] = cards;
            d["weight"] = a.weight.to_string();
            d["partition"] = a.partition.blocks();
            out.push_back(std::move(d));
        }
        return out;
    }, py::arg("word"), py::arg("gauge") = "identity");

    m.def("orthogonal_polynomials", [](int n_max, const std::string& preset) {
        return strings(three_term_polys(preset_from(preset), n_max).polys);
    }, py::arg("n_max"), py::arg("preset") = "charlier-strict");

    m.def("jfraction", [](int order, const std::string& preset, int depth) {
        const int d = depth > 0 ? depth : default_depth(order);
        return strings(cf_series(cf_spec(preset_from(preset), d), order));
    }, py::arg("order"), py::arg("preset") = "charlier-strict", py::arg("depth") = 0);

    m.def("binomial_moments", [](long trials, const std::string& p, const std::string& q, const std::string& t, int n_max) {
        const auto j = binomial_specialized(trials, parse_rational(p), parse_rational(q), parse_rational(t), n_max / 2 + 1);
        std::vector<std::string> out;
        for (const auto& v : motzkin_moment_sequence(j, n_max)) out.push_back(to_string(v));
        return out;
    }, py::arg("m"), py::arg("p"), py::arg("q"), py::arg("t"), py::arg("n_max"));

    m.def("verify", [](const std::vector<std::string>& suites, int n_max) {
        VerifyOptions options;
        options.suites = suites;
        options.n_max = n_max;
        std::vector<CheckReport> reports;
        {
            py::gil_scoped_release release;
            reports = run_verification(options);
        }
        std::vector<py::dict> out;
        for (const auto& r : reports) {
            py::dict d;
            d["name"] = r.name;
            d["checked"] = r.checked;
            d["failures"] = r.failures;
            out.push_back(std::move(d));
        }
        return out;
    }, py::arg("suites") = std::vector<std::string>{"all"}, py::arg("n_max") = 8);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command-line interface in process; returns (exit code, stdout, stderr).");
}
