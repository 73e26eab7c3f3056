#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minvar/acceptance.hpp"
#include "minvar/cmclassify.hpp"
#include "minvar/corpus.hpp"
#include "minvar/error.hpp"
#include "minvar/exactlat.hpp"
#include "minvar/fpcohom.hpp"
#include "minvar/laurent.hpp"
#include "minvar/mulaction.hpp"
#include "minvar/report.hpp"

namespace py = pybind11;
using namespace minvar;

namespace {

using PyMatrix = std::vector<std::vector<py::int_>>;

IntMatrix to_matrix(const PyMatrix& rows)
{
    if (rows.empty() || rows.front().empty())
        throw InvalidInput("empty matrix");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw InvalidInput("ragged matrix");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = Integer(py::str(rows[i][j]).cast<std::string>());
    }
    return m;
}

py::list from_matrix(const IntMatrix& m)
{
    py::list out;
    py::object to_int = py::module_::import("builtins").attr("int");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.append(to_int(m(i, j).get_str()));
        out.append(row);
    }
    return out;
}

MatGroup to_group(const std::vector<PyMatrix>& gens, std::size_t n, std::size_t max_order)
{
    if (gens.empty()) {
        if (n == 0)
            throw InvalidInput("n is required for an empty generator list");
        return MatGroup::trivial(n);
    }
    std::vector<IntMatrix> m;
    for (const auto& g : gens)
        m.push_back(to_matrix(g));
    return MatGroup::generate(m, max_order);
}

py::object to_python(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& o)
{
    return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_minvar, m)
{
    m.doc() = "Cohen-Macaulay tests for multiplicative invariants over F_p";

    py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const InvalidInput& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "snf",
        [](const PyMatrix& a) {
            SmithForm f = snf(to_matrix(a));
            return py::make_tuple(from_matrix(f.S), from_matrix(f.U), from_matrix(f.V));
        },
        py::arg("matrix"), "Smith normal form (S, U, V) with U * A * V = S.");

    m.def(
        "column_hnf", [](const PyMatrix& a) { return from_matrix(column_hnf(to_matrix(a))); }, py::arg("matrix"));

    m.def(
        "group_order",
        [](const std::vector<PyMatrix>& gens, std::size_t n, std::size_t max_order) {
            return to_group(gens, n, max_order).order();
        },
        py::arg("generators"), py::arg("n") = 0, py::arg("max_order") = kDefaultMaxOrder);

    m.def(
        "group_elements",
        [](const std::vector<PyMatrix>& gens, std::size_t n) {
            py::list out;
            const MatGroup g = to_group(gens, n, kDefaultMaxOrder);
            for (const auto& e : g.elements())
                out.append(from_matrix(e));
            return out;
        },
        py::arg("generators"), py::arg("n") = 0);

    m.def(
        "cohomology_dims",
        [](const std::vector<PyMatrix>& gens, std::uint32_t p, std::size_t max_degree, std::size_t n) {
            CohomologyOptions opts;
            opts.max_depth = std::max(opts.max_depth, max_degree);
            return cohomology_table(to_group(gens, n, kDefaultMaxOrder).cayley_table(), p, max_degree, opts);
        },
        py::arg("generators"), py::arg("p"), py::arg("max_degree"), py::arg("n") = 0,
        "dim H^r(G, F_p) for r = 0 .. max_degree.");

    m.def(
        "mu_p",
        [](const std::vector<PyMatrix>& gens, std::uint32_t p, std::size_t search_limit, std::size_t n) {
            MuValue v = mu_p(to_group(gens, n, kDefaultMaxOrder), p, search_limit);
            return py::make_tuple(v.value ? py::object(py::int_(*v.value)) : py::object(py::none()), v.exact);
        },
        py::arg("generators"), py::arg("p"), py::arg("search_limit") = 10, py::arg("n") = 0,
        "(value, exact); value None means infinity.");

    m.def(
        "mu_action",
        [](const std::vector<PyMatrix>& gens, std::uint32_t p, std::size_t search_limit, std::size_t n) {
            MuValue v = mu_action(to_group(gens, n, kDefaultMaxOrder), p, search_limit);
            return py::make_tuple(v.value ? py::object(py::int_(*v.value)) : py::object(py::none()), v.exact);
        },
        py::arg("generators"), py::arg("p"), py::arg("search_limit") = 10, py::arg("n") = 0);

    m.def(
        "height_ir",
        [](const std::vector<PyMatrix>& gens, std::size_t n) { return height_ir(to_group(gens, n, kDefaultMaxOrder)); },
        py::arg("generators"), py::arg("n") = 0);

    m.def(
        "classify",
        [](const std::vector<PyMatrix>& gens, long p, bool audit, std::size_t search_limit, std::size_t n) {
            ClassifyOptions opts;
            opts.audit = audit;
            opts.search_limit = search_limit;
            return to_python(to_json(classify(to_group(gens, n, kDefaultMaxOrder), p, opts)));
        },
        py::arg("generators"), py::arg("p"), py::arg("audit") = false, py::arg("search_limit") = 10,
        py::arg("n") = 0, "Verdict as a dict: status, rule, certificate, notes, consistent[, audit].");

    m.def(
        "invariant_dim_in_ball",
        [](const std::vector<PyMatrix>& gens, std::uint32_t p, long ball, std::size_t n) {
            BallDimension d = invariant_dim_in_ball(to_group(gens, n, kDefaultMaxOrder), p, ball);
            return py::make_tuple(d.dim, d.burnside);
        },
        py::arg("generators"), py::arg("p"), py::arg("ball"), py::arg("n") = 0, "(orbit count, Burnside count)");

    m.def(
        "check_g1_decomposition",
        [](std::uint32_t p, long ball) {
            G1Decomposition d = check_g1_decomposition(p, ball);
            py::dict out;
            out["ball"] = d.ball;
            out["dim_g1"] = d.dim_g1;
            out["dim_gamma"] = d.dim_gamma;
            out["dim_theta"] = d.dim_theta;
            out["dim_sum"] = d.dim_sum;
            out["direct"] = d.direct;
            out["holds"] = d.holds;
            return out;
        },
        py::arg("p"), py::arg("ball"));

    m.def(
        "builtin_names",
        []() {
            std::vector<std::string> out;
            for (const auto& e : builtin_corpus())
                out.push_back(e.name);
            return out;
        });

    m.def(
        "builtin_jobspec", [](const std::string& name, long p) { return to_python(to_json(builtin_jobspec(name, p))); },
        py::arg("name"), py::arg("p") = 0);

    m.def(
        "run",
        [](const std::string& command, const py::object& spec, std::optional<long> extra) {
            JobSpec s = parse_jobspec(from_python(spec));
            if (command == "classify")
                return to_python(classify_report(s));
            if (command == "analyze")
                return to_python(analyze_report(s));
            if (command == "cohomology")
                return to_python(cohomology_report(s, static_cast<std::size_t>(extra.value_or(s.options.cohomology_depth))));
            if (command == "invariants")
                return to_python(invariants_report(s, extra.value_or(s.options.ball)));
            throw InvalidInput("unknown command " + command);
        },
        py::arg("command"), py::arg("jobspec"), py::arg("extra") = py::none(),
        "Same JSON reports as the command line; extra is --depth or --ball.");

    m.def("selftest", []() { return to_python(selftest_report(run_acceptance())); });
}
