#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "sce/families.hpp"
#include "sce/format.hpp"
#include "sce/genfunc.hpp"
#include "sce/integrals.hpp"
#include "sce/verify.hpp"

namespace py = pybind11;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs accept anything
// whose str() is "p/q" or an integer (int, Fraction, str).
py::object to_fraction(const sce::Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(r.numerator().get_str())), py::int_(py::str(r.denominator().get_str())));
}

sce::Rational from_py(const py::handle& obj) { return sce::Rational::parse(py::str(obj).cast<std::string>()); }

std::optional<sce::Rational> optional_rate(const py::object& obj) {
  if (obj.is_none()) return std::nullopt;
  return from_py(obj);
}

sce::Kind kind_from(const std::string& name) {
  auto k = sce::parse_kind(name);
  if (!k) throw py::value_error("unknown kind '" + name + "'");
  return *k;
}

py::list coeff_pairs(const sce::Poly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(py::make_tuple(to_fraction(c.re()), to_fraction(c.im())));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact SCE polynomial families, generating functions and antiderivatives";

  py::class_<sce::Poly>(m, "Poly")
      .def_property_readonly("degree", &sce::Poly::degree)
      .def("is_real", &sce::Poly::is_real)
      .def("coeffs", &coeff_pairs, "Ascending (re, im) Fraction pairs")
      .def("real_coeffs",
           [](const sce::Poly& p) {
             if (!p.is_real()) throw py::value_error("polynomial has complex coefficients");
             py::list out;
             for (const auto& c : p.coeffs()) out.append(to_fraction(c.re()));
             return out;
           })
      .def("derivative", py::overload_cast<>(&sce::Poly::derivative, py::const_))
      .def("__call__", [](const sce::Poly& p, const py::object& x) { return to_fraction(p(from_py(x)).re()); })
      .def("latex", [](const sce::Poly& p) { return sce::to_latex(p); })
      .def("__str__", [](const sce::Poly& p) { return sce::to_text(p); })
      .def("__repr__", [](const sce::Poly& p) { return "Poly(" + sce::to_text(p) + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);

  m.def("e_explicit", &sce::e_explicit, py::arg("n"));
  m.def("e_recurrence", &sce::e_recurrence, py::arg("n"));
  m.def("e_rodrigues", &sce::e_rodrigues, py::arg("n"));
  m.def("e_laguerre", &sce::e_laguerre, py::arg("n"));
  m.def("laguerre_general", [](int n, const py::object& alpha) { return sce::laguerre_general(n, from_py(alpha)); },
        py::arg("n"), py::arg("alpha"));
  m.def("em_explicit", [](int n, const py::object& r) { return sce::em_explicit(n, from_py(r)); }, py::arg("n"),
        py::arg("m"));
  m.def("em_rodrigues", [](int n, const py::object& r) { return sce::em_rodrigues(n, from_py(r)); }, py::arg("n"),
        py::arg("m"));
  m.def("antideriv_poly_exp", [](int n, const py::object& r) { return sce::antideriv_poly_exp(n, from_py(r)); },
        py::arg("n"), py::arg("m"));
  m.def("s_explicit", &sce::s_explicit, py::arg("n"));
  m.def("s_from_e", &sce::s_from_e, py::arg("n"));
  m.def("s_rodrigues", &sce::s_rodrigues, py::arg("n"));
  m.def("c_from_s", &sce::c_from_s, py::arg("n"));
  m.def("c_from_e", &sce::c_from_e, py::arg("n"));
  m.def("shat", &sce::shat, py::arg("k"));
  m.def("chat", &sce::chat, py::arg("k"));

  m.def(
      "poly_json",
      [](const std::string& family, int n, const py::object& rate) {
        auto tag = sce::parse_family(family);
        if (!tag) throw py::value_error("unknown family '" + family + "'");
        sce::FamilyId id{*tag, n, optional_rate(rate)};
        return sce::to_json(id, sce::family_poly(id));
      },
      py::arg("family"), py::arg("n"), py::arg("m") = py::none());
  m.def("parse_poly_json", [](const std::string& text) { return sce::parse_poly_json(text).poly; });

  py::class_<sce::FormalSeries>(m, "FormalSeries")
      .def_property_readonly("order", &sce::FormalSeries::order)
      .def("coeff", &sce::FormalSeries::coeff, py::arg("k"))
      .def("latex", [](const sce::FormalSeries& f) { return sce::to_latex(f); })
      .def("__str__", [](const sce::FormalSeries& f) { return sce::to_text(f); })
      .def(py::self == py::self);

  m.def("series_E", &sce::series_E, py::arg("order"));
  m.def("series_Em", [](const py::object& r, int order) { return sce::series_Em(from_py(r), order); }, py::arg("m"),
        py::arg("order"));
  m.def("series_S", &sce::series_S, py::arg("order"));
  m.def("series_C", &sce::series_C, py::arg("order"));

  py::class_<sce::LinearHGSpec>(m, "LinearHGSpec")
      .def(py::init([](const py::object& alpha, const py::object& beta, const py::object& gamma,
                       const py::object& delta0, const py::object& delta1) {
             return sce::LinearHGSpec{from_py(alpha), from_py(beta), from_py(gamma), from_py(delta0), from_py(delta1)};
           }),
           py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta0"), py::arg("delta1"))
      .def_static("for_e", &sce::LinearHGSpec::for_e)
      .def_static("for_em", [](const py::object& r) { return sce::LinearHGSpec::for_em(from_py(r)); })
      .def_static("for_laguerre", [](const py::object& a) { return sce::LinearHGSpec::for_laguerre(from_py(a)); });

  m.def("nu_degeneracy_check", &sce::nu_degeneracy_check, py::arg("spec"));
  m.def(
      "sigma_linear",
      [](const sce::LinearHGSpec& spec, int n) {
        auto s = sce::sigma_linear(spec, n);
        return py::dict(py::arg("alpha") = to_fraction(s.alpha), py::arg("beta") = to_fraction(s.beta),
                        py::arg("exponent") = to_fraction(s.exponent), py::arg("rate") = to_fraction(s.rate));
      },
      py::arg("spec"), py::arg("n"));
  m.def("theorem2_genfunc", &sce::theorem2_genfunc, py::arg("spec"), py::arg("order"));

  py::class_<sce::ClosedForm>(m, "ClosedForm")
      .def_property_readonly("kind", [](const sce::ClosedForm& cf) { return std::string(sce::kind_name(cf.kind)); })
      .def_readonly("n", &sce::ClosedForm::n)
      .def_property_readonly("rate", [](const sce::ClosedForm& cf) { return to_fraction(cf.rate); })
      .def_readonly("main_part", &sce::ClosedForm::main_part)
      .def_readonly("hat_part", &sce::ClosedForm::hat_part)
      .def("__str__", [](const sce::ClosedForm& cf) { return sce::to_text(cf); });

  m.def(
      "closed_form",
      [](const std::string& kind, int n, const py::object& rate) {
        return sce::closed_form(kind_from(kind), n, optional_rate(rate));
      },
      py::arg("kind"), py::arg("n"), py::arg("m") = py::none());
  m.def("check_antiderivative", &sce::check_antiderivative, py::arg("cf"));
  m.def("eval_closed_form", &sce::eval_closed_form, py::arg("cf"), py::arg("x"));
  m.def("definite_integral", &sce::definite_integral, py::arg("cf"), py::arg("a"), py::arg("b"));

  py::class_<sce::QuadResult>(m, "QuadResult")
      .def_readonly("value", &sce::QuadResult::value)
      .def_readonly("est_error", &sce::QuadResult::est_error)
      .def_readonly("evaluations", &sce::QuadResult::evaluations);
  py::register_exception<sce::QuadratureError>(m, "QuadratureError");
  m.def(
      "quad_adaptive",
      [](const std::string& kind, int n, double a, double b, const py::object& rate, double tol, int max_depth) {
        return sce::quad_adaptive(kind_from(kind), n, rate.is_none() ? sce::Rational(1) : from_py(rate), a, b, tol,
                                  max_depth);
      },
      py::arg("kind"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("m") = py::none(), py::arg("tol") = 1e-12,
      py::arg("max_depth") = sce::kQuadMaxDepth);

  m.def(
      "verify",
      [](const std::string& suite, int max_n) {
        sce::Report report = sce::run_suite(suite, max_n);
        py::list rows;
        for (const auto& r : report.results()) rows.append(py::make_tuple(r.identity, r.n, r.passed));
        return py::make_tuple(report.all_passed(), rows);
      },
      py::arg("suite"), py::arg("max_n"));
}
