#include "qsphere/chern.hpp"
#include "qsphere/io.hpp"
#include "qsphere/repsim.hpp"

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qsphere;

namespace {

Generator generator_from_name(const std::string& name) {
  for (Generator g : {Generator::AL, Generator::ALS, Generator::BE, Generator::BES, Generator::Z})
    if (generator_name(g) == name) return g;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

py::dict cycle_dict(const CycleReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["convention"] = std::string(convention_name(r.convention));
  d["equal"] = r.equal;
  d["lhs"] = chain_to_json(r.lhs).dump();
  d["rhs"] = chain_to_json(r.rhs).dump();
  d["difference"] = chain_to_json(r.difference).dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic on the quantum 4-sphere and its instanton projection";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidParameter>(m, "InvalidParameter", PyExc_ValueError);
  py::register_exception<ZeroEvaluationError>(m, "ZeroEvaluationError", PyExc_ZeroDivisionError);

  py::class_<QLaurent>(m, "QLaurent")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init([](const std::string& text) { return QLaurent::parse(text); }))
      .def_static("q", &QLaurent::q, py::arg("exponent") = 1)
      .def("is_zero", &QLaurent::is_zero)
      .def("eval", py::overload_cast<double>(&QLaurent::eval, py::const_))
      .def("eval_exact", [](const QLaurent& p, const std::string& q0) {
        return rational_str(p.eval(parse_rational(q0)));
      }, "Exact value at a rational point given as 'p/r'; returned as a string")
      .def("invert_q", &QLaurent::invert_q)
      .def("latex", &QLaurent::latex)
      .def(-py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &QLaurent::str)
      .def("__repr__", [](const QLaurent& p) { return "QLaurent('" + p.str() + "')"; });
  py::implicitly_convertible<long, QLaurent>();

  py::class_<NCPoly>(m, "Poly")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init<const QLaurent&>())
      .def(py::init([](const std::string& text) { return NCPoly::parse(text); }))
      .def_static("alpha", &NCPoly::alpha)
      .def_static("alpha_star", &NCPoly::alpha_star)
      .def_static("beta", &NCPoly::beta)
      .def_static("beta_star", &NCPoly::beta_star)
      .def_static("z", &NCPoly::z)
      .def("is_zero", &NCPoly::is_zero)
      .def("degree", &NCPoly::degree)
      .def("star", [](const NCPoly& x) { return star(x); })
      .def("latex", &NCPoly::latex)
      .def(-py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(QLaurent() * py::self)
      .def(py::self == py::self)
      .def("__str__", &NCPoly::str)
      .def("__repr__", [](const NCPoly& x) { return "Poly('" + x.str() + "')"; });

  m.def("normal_form", [](const std::vector<std::string>& letters) {
    Word w;
    for (const auto& s : letters) w.push_back(generator_from_name(s));
    return normal_form(w);
  }, py::arg("letters"), "Normal form of a word given as letters 'al', 'al*', 'be', 'be*', 'z'");

  m.def("ideal_generators", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& g : ideal_generators()) out.emplace_back(g.name, g.expr.str());
    return out;
  });

  m.def("iso_images", [] {
    const auto h = inversion_assignment();
    std::vector<std::pair<std::string, NCPoly>> out;
    for (const auto& g : ideal_generators()) out.emplace_back(g.name, substitute(g.expr, h));
    return out;
  }, "Images of the ideal generators under q -> 1/q, alpha -> alpha*, beta -> q beta");

  m.def("projection_is_idempotent", [] { return is_idempotent(instanton_idempotent()); });

  m.def("chern_json", [](int n) { return chain_to_json(chern_component(instanton_idempotent(), n)).dump(); },
        py::arg("n"), "ch_n of the instanton projection as a JSON string");

  m.def("golden_json", [](const std::string& name) { return std::string(golden_json(name)); }, py::arg("name"));

  m.def("verify_cycle", [](int n, const std::string& convention) {
    return cycle_dict(verify_cycle(instanton_idempotent(), n, parse_convention(convention)));
  }, py::arg("n"), py::arg("convention") = "paper-derived");

  m.def("relation_residuals", [](double qval, Complex lambda, const std::string& sign, int dim) {
    std::vector<py::dict> out;
    for (const auto& r : relation_residuals(build_rep(qval, lambda, parse_sign(sign), dim))) {
      py::dict d;
      d["relation"] = r.relation;
      d["residual"] = r.residual;
      d["subspace_dim"] = r.subspace_dim;
      d["full_residual"] = r.full_residual;
      out.push_back(d);
    }
    return out;
  }, py::arg("q"), py::arg("lam"), py::arg("sign") = "plus", py::arg("dim") = 32);

  m.def("character_check", [](double qval, Complex alpha, Complex beta, double z, double tolerance) {
    const CharacterReport r = character_check(qval, alpha, beta, z, tolerance);
    py::dict d;
    d["valid"] = r.valid;
    d["sphere_difference"] = r.sphere_difference;
    std::vector<std::pair<std::string, double>> residuals;
    for (const auto& c : r.residuals) residuals.emplace_back(c.relation, c.residual);
    d["residuals"] = residuals;
    return d;
  }, py::arg("q"), py::arg("alpha"), py::arg("beta") = Complex(0.0), py::arg("z") = 0.0,
     py::arg("tolerance") = 1e-12);
}
