#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <rc/bracket.hpp>
#include <rc/coeff_file.hpp>
#include <rc/genfun.hpp>
#include <rc/lattice.hpp>
#include <rc/parallel.hpp>
#include <rc/series.hpp>
#include <rc/siegel.hpp>
#include <rc/verify.hpp>

namespace py = pybind11;

namespace {

// Rationals cross the boundary as fractions.Fraction; int, Fraction and
// "a/b" strings are accepted on input. Floats are refused.
rc::Rational to_rational(const py::handle &obj)
{
    if (py::isinstance<py::float_>(obj)) {
        throw py::type_error("floats are not exact; pass an int, Fraction or 'a/b' string");
    }
    return rc::parse_rational(py::str(obj).cast<std::string>());
}

py::object to_fraction(const rc::Rational &q)
{
    static const py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::dict jacobi_coeffs(const rc::JacobiSeries &f)
{
    py::dict out;
    for (const auto &[key, c] : f.coeffs()) {
        out[py::make_tuple(key.first, key.second)] = to_fraction(c);
    }
    return out;
}

py::dict siegel_coeffs(const rc::SiegelSeries &F)
{
    py::dict out;
    for (const auto &[key, c] : F.coeffs()) {
        const auto &[n, r, m] = key;
        out[py::make_tuple(n, r, m)] = to_fraction(c);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Rankin-Cohen brackets of Jacobi and degree-2 Siegel forms";

    py::register_exception<rc::FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<rc::JacobiSeries>(m, "JacobiSeries")
        .def(py::init<int, int, int>(), py::arg("weight"), py::arg("index"), py::arg("trunc"))
        .def_property_readonly("weight", &rc::JacobiSeries::weight)
        .def_property_readonly("index", &rc::JacobiSeries::index)
        .def_property_readonly("trunc", &rc::JacobiSeries::trunc)
        .def("coeff", [](const rc::JacobiSeries &f, int n, int r) { return to_fraction(f.coeff(n, r)); })
        .def("set", [](rc::JacobiSeries &f, int n, int r, const py::object &v) { f.set(n, r, to_rational(v)); })
        .def("coeffs", &jacobi_coeffs)
        .def("is_zero", &rc::JacobiSeries::is_zero)
        .def("__len__", &rc::JacobiSeries::size)
        .def("__eq__", [](const rc::JacobiSeries &a, const rc::JacobiSeries &b) { return a == b; })
        .def("__mul__", [](const rc::JacobiSeries &a, const rc::JacobiSeries &b) { return rc::mul(a, b); })
        .def("__add__", [](const rc::JacobiSeries &a, const rc::JacobiSeries &b) { return rc::add(a, b); })
        .def("__repr__", [](const rc::JacobiSeries &f) {
            return "<JacobiSeries weight=" + std::to_string(f.weight()) + " index=" + std::to_string(f.index())
                   + " trunc=" + std::to_string(f.trunc()) + " terms=" + std::to_string(f.size()) + ">";
        });

    py::class_<rc::SiegelSeries>(m, "SiegelSeries")
        .def_property_readonly("weight", &rc::SiegelSeries::weight)
        .def_property_readonly("trunc", &rc::SiegelSeries::trunc)
        .def("coeff", [](const rc::SiegelSeries &F, int n, int r, int mm) { return to_fraction(F.coeff(n, r, mm)); })
        .def("coeffs", &siegel_coeffs)
        .def("slice", &rc::SiegelSeries::slice, py::arg("m"))
        .def("is_zero", &rc::SiegelSeries::is_zero)
        .def("__eq__", [](const rc::SiegelSeries &a, const rc::SiegelSeries &b) { return a == b; })
        .def("__repr__", [](const rc::SiegelSeries &F) {
            return "<SiegelSeries weight=" + std::to_string(F.weight()) + " trunc=" + std::to_string(F.trunc())
                   + " terms=" + std::to_string(F.coeffs().size()) + ">";
        });

    m.def(
        "jacobi_theta",
        [](const std::string &lattice, int half_norm_index, int trunc) {
            const auto desc = rc::LatticeDesc::by_name(lattice);
            return rc::jacobi_theta(desc, rc::default_vector(desc, half_norm_index), trunc);
        },
        py::arg("lattice") = "e8", py::arg("half_norm_index") = 1, py::arg("trunc") = 8);
    m.def(
        "siegel_theta",
        [](const std::string &lattice, int trunc) { return rc::siegel_theta(rc::LatticeDesc::by_name(lattice), trunc); },
        py::arg("lattice") = "e8", py::arg("trunc") = 3);
    m.def(
        "eisenstein",
        [](int k, int trunc) { return rc::eisenstein_q(k, trunc).to_jacobi(); },
        py::arg("k"), py::arg("trunc"), "Elliptic Eisenstein series E_k embedded at index 0.");

    m.def("mul", py::overload_cast<const rc::JacobiSeries &, const rc::JacobiSeries &>(&rc::mul));
    m.def("heat", &rc::heat);
    m.def(
        "bracket_jacobi",
        [](const rc::JacobiSeries &f, const rc::JacobiSeries &g, const py::object &x, int v) {
            const auto xq = to_rational(x);
            py::gil_scoped_release release;
            return rc::bracket_jacobi(f, g, xq, v);
        },
        py::arg("f"), py::arg("g"), py::arg("x"), py::arg("v"));
    m.def(
        "bracket_siegel",
        [](const rc::SiegelSeries &F, const rc::SiegelSeries &G, int l, const std::string &mode) {
            if (mode != "direct" && mode != "jacobi") {
                throw py::value_error("mode must be 'direct' or 'jacobi'");
            }
            py::gil_scoped_release release;
            return mode == "direct" ? rc::bracket_siegel_direct(F, G, l) : rc::bracket_siegel_via_jacobi(F, G, l);
        },
        py::arg("F"), py::arg("G"), py::arg("l"), py::arg("mode") = "direct");
    m.def(
        "rank_over_x",
        [](const rc::JacobiSeries &f, const rc::JacobiSeries &g, int v) { return rc::bracket_rank_over_x(f, g, v); },
        py::arg("f"), py::arg("g"), py::arg("v"));
    m.def(
        "crosscheck",
        [](const rc::JacobiSeries &f, const rc::JacobiSeries &g, const py::object &x, int v) {
            const auto res = rc::crosscheck_bracket(f, g, to_rational(x), v);
            switch (res.status) {
            case rc::CrosscheckResult::Status::proportional:
                return py::tuple(py::make_tuple("proportional", to_fraction(res.lambda)));
            case rc::CrosscheckResult::Status::indeterminate:
                return py::tuple(py::make_tuple("indeterminate", py::none()));
            case rc::CrosscheckResult::Status::mismatch:
                break;
            }
            return py::tuple(py::make_tuple("mismatch", py::str(res.witness)));
        },
        py::arg("f"), py::arg("g"), py::arg("x"), py::arg("v"),
        "Returns (status, lambda-or-witness) comparing the generating-function construction to the bracket.");
    m.def(
        "check_recursions",
        [](const py::object &k, const py::object &kp, int l) { return rc::check_recursions(to_rational(k), to_rational(kp), l); },
        py::arg("k"), py::arg("k_prime"), py::arg("l"));
    m.def("disc_class_invariant", [](const rc::JacobiSeries &f) { return rc::check_disc_class_invariance(f).invariant; });

    m.def("export_jacobi", &rc::export_jacobi);
    m.def("export_siegel", &rc::export_siegel);
    m.def("import_jacobi", [](const std::string &text) { return rc::import_jacobi(text); });
    m.def("import_siegel", [](const std::string &text) { return rc::import_siegel(text); });

    m.def("set_thread_count", &rc::set_thread_count);
    m.def("thread_count", &rc::thread_count);

    m.def(
        "verify",
        [](int criterion) {
            rc::CriterionResult result;
            {
                py::gil_scoped_release release;
                result = rc::run_criterion(criterion, rc::VerifyOptions{});
            }
            return py::make_tuple(result.passed, result.witness);
        },
        py::arg("criterion"), "Runs one acceptance criterion (1-9) without fixtures; returns (passed, witness).");
}
