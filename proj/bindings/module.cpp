#include "fibpoly/identities.hpp"
#include "fibpoly/parse.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

namespace py = pybind11;
using namespace fibpoly;

namespace {

Rational rational_from_object(const py::object& value) {
    if (py::isinstance<Rational>(value)) {
        return value.cast<Rational>();
    }
    if (py::isinstance<py::int_>(value)) {
        return Rational(BigInt(py::str(value).cast<std::string>()));
    }
    if (py::isinstance<py::str>(value)) {
        return parse_rational(value.cast<std::string>());
    }
    throw py::type_error("expected a Rational, int or rational string");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Fibonacci-type / Lucas-type polynomial sequences via the Q(x) matrix";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<Rational>(m, "Rational")
        .def(py::init([](const py::object& value) { return rational_from_object(value); }),
             py::arg("value"))
        .def_property_readonly("numerator", [](const Rational& r) { return r.num().str(); })
        .def_property_readonly("denominator", [](const Rational& r) { return r.den().str(); })
        .def("is_zero", &Rational::is_zero)
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def("__pow__",
             [](const Rational& r, unsigned long long k) { return fibpoly::pow(r, k); })
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; });

    py::class_<Poly>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }),
             py::arg("text"))
        .def_static("from_coeffs",
                    [](const std::vector<py::object>& ascending) {
                        std::vector<Rational> cs;
                        cs.reserve(ascending.size());
                        for (const py::object& c : ascending) {
                            cs.push_back(rational_from_object(c));
                        }
                        return Poly::from_coeffs(std::move(cs));
                    })
        .def_property_readonly("degree",
                               [](const Poly& f) -> std::optional<std::size_t> {
                                   return f.degree();
                               })
        .def("coeffs",
             [](const Poly& f) {
                 std::vector<std::string> out;
                 for (const Rational& c : f.coeffs()) {
                     out.push_back(c.str());
                 }
                 return out;
             })
        .def("is_zero", &Poly::is_zero)
        .def("eval",
             [](const Poly& f, const py::object& x0) { return f.eval(rational_from_object(x0)); })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def("__pow__", [](const Poly& f, unsigned long long k) { return fibpoly::pow(f, k); })
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& f) { return "Poly('" + f.str() + "')"; });

    py::enum_<FamilyKind>(m, "FamilyKind")
        .value("fibonacci", FamilyKind::fibonacci)
        .value("lucas", FamilyKind::lucas);

    py::class_<FamilySpec>(m, "FamilySpec")
        .def(py::init([](const std::string& name, FamilyKind kind, const py::object& a,
                         const py::object& b, const py::object& c, const py::object& d) {
                 FamilySpec spec;
                 spec.name = name;
                 spec.kind = kind;
                 spec.a = rational_from_object(a);
                 if (!b.is_none()) {
                     spec.b = parse_poly(py::str(b).cast<std::string>());
                 }
                 spec.c = parse_poly(py::str(c).cast<std::string>());
                 spec.d = parse_poly(py::str(d).cast<std::string>());
                 validate(spec);
                 return spec;
             }),
             py::arg("name"), py::arg("kind"), py::arg("a"), py::arg("b") = py::none(),
             py::arg("c") = "", py::arg("d") = "")
        .def_readonly("name", &FamilySpec::name)
        .def_readonly("kind", &FamilySpec::kind)
        .def_readonly("a", &FamilySpec::a)
        .def_readonly("b", &FamilySpec::b)
        .def_readonly("c", &FamilySpec::c)
        .def_readonly("d", &FamilySpec::d)
        .def(py::self == py::self)
        .def("__repr__", [](const FamilySpec& s) {
            return "FamilySpec(name='" + s.name + "', kind='" + std::string(kind_name(s.kind)) +
                   "')";
        });

    py::class_<FamilyPair>(m, "FamilyPair")
        .def_readonly("lucas", &FamilyPair::lucas)
        .def_readonly("fib", &FamilyPair::fib);

    m.def("builtin_families", [] { return builtin_families(); });
    m.def("find_builtin",
          [](const std::string& name) -> std::optional<FamilySpec> {
              const FamilySpec* spec = find_builtin(name);
              if (spec == nullptr) {
                  return std::nullopt;
              }
              return *spec;
          },
          py::arg("name"));
    m.def("companion_fib", &companion_fib, py::arg("spec"));
    m.def("make_family_pair", &make_family_pair, py::arg("lucas_spec"));
    m.def("load_families", [](const std::string& text) { return load_families(text); },
          py::arg("json_text"));
    m.def("families_to_json_text", &families_to_json_text, py::arg("specs"));

    m.def("parse_poly", [](const std::string& text) { return parse_poly(text); },
          py::arg("text"));
    m.def("parse_rational", [](const std::string& text) { return parse_rational(text); },
          py::arg("text"));

    py::class_<Mat2>(m, "Mat2")
        .def_readonly("e11", &Mat2::e11)
        .def_readonly("e12", &Mat2::e12)
        .def_readonly("e21", &Mat2::e21)
        .def_readonly("e22", &Mat2::e22)
        .def(py::self == py::self)
        .def(py::self * py::self)
        .def("__str__", &Mat2::str)
        .def("__repr__", &Mat2::str);

    m.def("q_matrix", &q_matrix, py::arg("spec"));
    m.def("mat_pow", [](const Mat2& a, unsigned long long n) { return pow(a, n); },
          py::arg("matrix"), py::arg("n"));
    m.def("mat_det", [](const Mat2& a) { return det(a); }, py::arg("matrix"));
    m.def("q_inverse_power_scaled", &q_inverse_power_scaled, py::arg("spec"), py::arg("m"));

    py::class_<SeqWindow>(m, "SeqWindow")
        .def_readonly("spec", &SeqWindow::spec)
        .def_readonly("lo", &SeqWindow::lo)
        .def_readonly("terms", &SeqWindow::terms)
        .def("hi", &SeqWindow::hi)
        .def("at", &SeqWindow::at, py::arg("n"), py::return_value_policy::copy);

    m.def("term_iter", &term_iter, py::arg("spec"), py::arg("n"));
    m.def("window", &window, py::arg("spec"), py::arg("lo"), py::arg("hi"));
    m.def("fib_via_qpow", &fib_via_qpow, py::arg("spec"), py::arg("n"));
    m.def("lucas_from_fib", &lucas_from_fib, py::arg("pair"), py::arg("n"));
    m.def("eval_term_fast",
          [](const FamilySpec& spec, std::size_t n, const py::object& x0) {
              return eval_term_fast(spec, n, rational_from_object(x0));
          },
          py::arg("spec"), py::arg("n"), py::arg("x0"));

    py::enum_<IdentityId>(m, "IdentityId")
        .value("fib_matrix", IdentityId::fib_matrix)
        .value("fib_cassini", IdentityId::fib_cassini)
        .value("fib_cassini_expanded", IdentityId::fib_cassini_expanded)
        .value("fib_honsberger", IdentityId::fib_honsberger)
        .value("fib_double_index", IdentityId::fib_double_index)
        .value("fib_docagne", IdentityId::fib_docagne)
        .value("fib_binomial", IdentityId::fib_binomial)
        .value("q_square", IdentityId::q_square)
        .value("lf_link_a", IdentityId::lf_link_a)
        .value("lf_link_b", IdentityId::lf_link_b)
        .value("lucas_matrix", IdentityId::lucas_matrix)
        .value("lucas_cassini", IdentityId::lucas_cassini)
        .value("lucas_cassini_expanded", IdentityId::lucas_cassini_expanded)
        .value("lucas_binomial", IdentityId::lucas_binomial)
        .value("mixed_honsberger", IdentityId::mixed_honsberger)
        .value("mixed_docagne", IdentityId::mixed_docagne);

    py::enum_<CheckStatus>(m, "CheckStatus")
        .value("PASS", CheckStatus::pass)
        .value("FAIL", CheckStatus::fail)
        .value("SKIPPED", CheckStatus::skipped);

    py::class_<SweepBounds>(m, "SweepBounds")
        .def(py::init<long, long, long, bool>(), py::arg("n_max") = 30, py::arg("m_max") = 30,
             py::arg("p_max") = 5, py::arg("include_p0") = false)
        .def_readwrite("n_max", &SweepBounds::n_max)
        .def_readwrite("m_max", &SweepBounds::m_max)
        .def_readwrite("p_max", &SweepBounds::p_max)
        .def_readwrite("include_p0", &SweepBounds::include_p0);

    py::class_<Counterexample>(m, "Counterexample")
        .def_readonly("indices", &Counterexample::indices)
        .def_readonly("lhs", &Counterexample::lhs)
        .def_readonly("rhs", &Counterexample::rhs);

    py::class_<IdentityReport>(m, "IdentityReport")
        .def_readonly("identity", &IdentityReport::identity)
        .def_readonly("family", &IdentityReport::family)
        .def_readonly("range", &IdentityReport::range)
        .def_readonly("status", &IdentityReport::status)
        .def_readonly("counterexample", &IdentityReport::counterexample)
        .def_readonly("reason", &IdentityReport::reason)
        .def("__repr__", [](const IdentityReport& r) {
            return "IdentityReport(" + std::string(identity_name(r.identity)) + ", " + r.family +
                   ", " + std::string(status_name(r.status)) + ")";
        });

    m.def("identity_name",
          [](IdentityId id) { return std::string(identity_name(id)); }, py::arg("id"));
    m.def("all_identities", [] {
        return std::vector<IdentityId>(all_identities().begin(), all_identities().end());
    });
    m.def("check_identity",
          [](IdentityId id, const FamilySpec& spec, const SweepBounds& bounds) {
              return check_identity(id, spec, bounds);
          },
          py::arg("id"), py::arg("spec"), py::arg("bounds") = SweepBounds{});
    m.def("run_suite",
          [](const std::vector<FamilySpec>& specs, const SweepBounds& bounds) {
              return run_suite(specs, bounds);
          },
          py::arg("specs"), py::arg("bounds") = SweepBounds{});
    m.def("reports_to_json_text", &reports_to_json_text, py::arg("reports"));
}
