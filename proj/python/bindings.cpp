#include "eqfix/cli.hpp"
#include "eqfix/error.hpp"
#include "eqfix/hypercube.hpp"
#include "eqfix/io.hpp"
#include "eqfix/linear_algebra.hpp"
#include "eqfix/localization.hpp"
#include "eqfix/reduced_space.hpp"
#include "eqfix/restriction_solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace eqfix;

namespace {

py::object to_py(const Integer& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Integer(v.get_num())), to_py(Integer(v.get_den())));
}

Rational from_py(const py::handle& h) {
    return parse_rational(py::str(h).cast<std::string>());
}

py::list poly_to_py(const UniPoly& p) {
    py::list out;
    for (const auto& c : p.coefficients()) out.append(to_py(c));
    return out;
}

py::object json_to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

FixedPointData load(const std::string& text) {
    InputDocument in = parse_input(text);
    validate(in.data);
    return in.data;
}

}  // namespace

PYBIND11_MODULE(_eqfix, m) {
    m.doc() = "Exact fixed point computations for Hamiltonian circle actions";

    static py::exception<Error> error(m, "EqfixError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::handle(error.ptr())(e.what());
            exc.attr("kind") = to_string(e.kind());
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    m.def("predict_counts", [](std::size_t n, py::object n0) {
        py::list out;
        const Rational r = from_py(n0);
        if (!is_integer(r)) throw Error(ErrorKind::InvalidArgument, "N0 must be an integer");
        for (const auto& v : predict_counts(n, r.get_num()).N) out.append(to_py(v));
        return out;
    }, py::arg("n"), py::arg("N0") = 1);

    m.def("vandermonde_kernel", [](std::size_t n) {
        py::list out;
        for (const auto& v : vandermonde_kernel(n)) out.append(to_py(v));
        return out;
    }, py::arg("n"));

    m.def("vandermonde_complete", [](std::size_t n, std::size_t l, const py::dict& known) {
        std::map<std::size_t, Rational> k;
        for (const auto& [key, value] : known) k.emplace(key.cast<std::size_t>(), from_py(value));
        py::list out;
        for (const auto& v : vandermonde_complete(n, l, k)) out.append(to_py(v));
        return out;
    }, py::arg("n"), py::arg("l"), py::arg("known"));

    m.def("_counts", [](const std::string& doc) {
        py::list out;
        for (const auto& v : counts(load(doc)).N) out.append(to_py(v));
        return out;
    });

    m.def("_integrate_chern", [](const std::string& doc, const std::vector<unsigned>& exponents) {
        const FixedPointData data = load(doc);
        const RatFunc f = integrate(data, chern_monomial_assignment(data, exponents));
        return py::make_tuple(poly_to_py(f.numerator()), poly_to_py(f.denominator()));
    });

    m.def("_consistency_check", [](const std::string& doc, std::size_t max_degree) {
        const auto rep = consistency_check(load(doc), max_degree);
        py::list failures;
        for (const auto& c : rep.failures()) failures.append(py::make_tuple(c.monomial_name(), c.integral.to_string()));
        py::dict out;
        out["passed"] = rep.passed();
        out["checked"] = rep.checks.size();
        out["failures"] = failures;
        return out;
    });

    m.def("_moment_equations", [](const std::string& doc) {
        const auto rep = verify_moment_equations(load(doc));
        py::list sums;
        for (const auto& [l, s] : rep.sums) sums.append(to_py(s));
        return py::make_tuple(rep.passed, sums);
    });

    m.def("_hypercube_data", [](std::size_t n, py::object c) {
        std::optional<ModelData> model;
        if (!c.is_none()) model = ModelData{n, from_py(c)};
        return json_to_py(to_json(hypercube_data(n, model)));
    });

    m.def("default_offset", [](std::size_t n) { return to_py(default_offset(n)); });

    m.def("_solve", [](const std::string& doc) {
        InputDocument in = parse_input(doc);
        validate(in.data);
        const auto cert = run_pipeline(in.data, in.table);
        py::dict bijection;
        for (const auto& [id, J] : cert.bijection) bijection[py::str(id)] = J.elements();
        py::dict out;
        out["bijection"] = bijection;
        out["model_agreement"] = cert.model_agreement;
        out["table_supplied"] = cert.table_supplied;
        return out;
    });

    m.def("reduced_cohomology", [](std::size_t n, py::object c) {
        const ModelData model{n, c.is_none() ? default_offset(n) : from_py(c)};
        const auto q = graded_quotient(kernel_generators(model), 2 * (n - 1));
        const auto data = hypercube_data(n, model);
        std::vector<std::size_t> counted;
        for (std::size_t i = 0; i < n; ++i) counted.push_back(betti_by_counting(data, i));
        py::dict out;
        out["betti"] = q.ranks();
        out["betti_by_counting"] = counted;
        out["torsion_free"] = q.torsion_free();
        out["poincare"] = poincare_check(q, n).passed;
        return out;
    }, py::arg("n"), py::arg("c") = py::none());

    m.def("search", [](std::size_t n, std::size_t points, std::size_t bound, std::size_t degree,
                       std::uint64_t max_candidates, unsigned threads) {
        SearchOptions opts;
        opts.max_candidates = max_candidates;
        opts.threads = threads;
        SearchResult res;
        {
            py::gil_scoped_release release;
            res = search_candidates(n, points, bound, degree, opts);
        }
        return res.passing;
    }, py::arg("n"), py::arg("points"), py::arg("bound"), py::arg("degree"),
       py::arg("max_candidates") = SearchOptions{}.max_candidates, py::arg("threads") = 1);

    m.def("_ring_document", [](std::size_t n) { return ring_document(n).dump(); });
    m.def("_ring_roundtrip", [](const std::string& doc) { return ring_document_roundtrip(nlohmann::json::parse(doc)); });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"eqfix"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
