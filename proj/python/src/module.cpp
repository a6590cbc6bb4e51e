#include "qbrauer/cli.hpp"
#include "qbrauer/diagram.hpp"
#include "qbrauer/errors.hpp"
#include "qbrauer/rmatrix.hpp"
#include "qbrauer/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qbrauer;

namespace {

std::vector<Rational> points(const std::optional<std::vector<std::string>>& q) {
    if (!q) return default_q_points();
    std::vector<Rational> out;
    for (const auto& s : *q) out.push_back(parse_rational(s));
    return out;
}

SuiteId suite_of(const std::string& name) {
    const auto s = parse_suite(name);
    if (!s) throw std::invalid_argument("unknown suite '" + name + "'");
    return *s;
}

py::dict as_dict(const RelationReport& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["relation_id"] = r.relation_id;
    d["n"] = r.n;
    d["l"] = r.l;
    d["specialization"] = r.specialization;
    d["verdict"] = std::string(verdict_name(r.verdict));
    d["residual_nonzeros"] = r.residual_nonzeros;
    d["residual_sample"] = r.residual_sample;
    d["note"] = r.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<GuardError>(m, "GuardError", PyExc_ValueError);
    py::register_exception<GenericityError>(m, "GenericityError", PyExc_ValueError);

    m.def("suites", [] {
        std::vector<std::string> out;
        for (SuiteId s : all_suites()) out.emplace_back(suite_name(s));
        return out;
    });

    m.def(
        "verify",
        [](const std::string& suite, int n, int l, std::optional<std::vector<std::string>> q) {
            SuiteOptions opts;
            opts.q_points = points(q);
            py::list out;
            for (const auto& r : verify_relation_suite(suite_of(suite), n, l, opts)) out.append(as_dict(r));
            return out;
        },
        py::arg("suite"), py::arg("n"), py::arg("l"), py::arg("q") = py::none(),
        "Run one relation suite; one dict per relation instance.");

    m.def(
        "duality",
        [](int l, int n, std::optional<std::vector<std::string>> q) {
            const DualityResult d = check_centralizer_duality(l, n, points(q));
            py::dict out;
            out["algebra"] = d.algebra_dimension;
            out["commutant"] = d.commutant_dimension;
            out["report"] = as_dict(d.report);
            return out;
        },
        py::arg("l"), py::arg("n"), py::arg("q") = py::none());

    m.def("diagrams", [](int l) {
        std::vector<std::string> out;
        for (const auto& d : enumerate_diagrams(l)) out.push_back(d.to_string());
        return out;
    });

    m.def("compose", [](const std::string& a, const std::string& b) {
        const Composite c = compose(BrauerDiagram::parse(a), BrauerDiagram::parse(b));
        return std::pair{c.loops, c.diagram.to_string()};
    });

    m.def("operator", [](const std::string& name, int n) {
        const auto op = parse_operator_name(name);
        if (!op) throw std::invalid_argument("unknown operator '" + name + "'");
        return format_matrix(build_operator(*op, n).matrix);
    });

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        "Run the command-line front end; returns (exit code, stdout, stderr).");
}
