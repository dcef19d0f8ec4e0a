#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include "spinindex/error.hpp"
#include "spinindex/ghat.hpp"
#include "spinindex/icosa.hpp"
#include "spinindex/reptheory.hpp"
#include "spinindex/serialize.hpp"
#include "spinindex/spinindex.hpp"
#include "spinindex/verify.hpp"

namespace py = pybind11;
namespace si = spinindex;

namespace {

py::dict class_row(std::size_t c) {
  const auto& G = si::GhatGroup::instance();
  const auto& cls = G.classes()[c];
  py::dict d;
  d["index"] = c;
  d["name"] = cls.name;
  d["ord"] = cls.order;
  d["size"] = cls.size();
  d["coset"] = cls.coset;
  d["minus"] = G.classes()[G.minus_class(c)].name;
  return d;
}

py::list ghat_classes() {
  py::list out;
  for (std::size_t c = 0; c < si::GhatGroup::instance().class_count(); ++c) out.append(class_row(c));
  return out;
}

py::list icosa_table() {
  const auto& g = si::BinaryIcosahedralGroup::instance();
  py::list out;
  for (auto c : si::kIcosaClasses) {
    py::dict chars;
    for (auto r : si::kIcosaReps) chars[py::str(std::string(si::rep_label(r)))] = si::character_2I(r)[si::index_of(c)].to_compact();
    py::dict d;
    d["class"] = std::string(si::class_label(c));
    d["size"] = si::class_size(c);
    d["order"] = si::class_element_order(c);
    d["re"] = g.element(g.class_representative(c)).re().to_compact();
    d["characters"] = chars;
    out.append(d);
  }
  return out;
}

py::list ghat_chartable() {
  py::list out;
  for (const auto& chi : si::chartable_ghat()) {
    std::vector<std::string> values;
    for (const auto& v : chi.values) values.push_back(v.to_compact());
    py::dict d;
    d["name"] = chi.label.name();
    d["dim"] = chi.dimension;
    d["spinorial"] = chi.spinorial;
    d["values"] = values;
    out.append(d);
  }
  return out;
}

py::dict orthogonality() {
  const auto r = si::check_orthogonality(si::chartable_ghat());
  py::dict d;
  d["ok"] = r.ok();
  d["rows_orthonormal"] = r.rows_orthonormal;
  d["columns_orthogonal"] = r.columns_orthogonal;
  d["dimension_sum"] = r.dimension_sum;
  d["detail"] = r.detail;
  return d;
}

py::list spin_davis() {
  py::list out;
  for (const auto& e : si::davis_spin_character().entries) {
    py::dict d;
    d["name"] = e.name;
    d["ord"] = e.order;
    d["size"] = e.size;
    d["fp_count"] = e.fp_count ? py::object(py::int_(*e.fp_count)) : py::object(py::str("inf"));
    d["spin"] = e.spin.to_compact();
    d["spin_float"] = e.spin.to_double();
    d["provenance"] = std::string(si::provenance_label(e.provenance));
    d["via_minus"] = e.via_minus;
    out.append(d);
  }
  return out;
}

py::dict spin_decompose() {
  const auto dec = si::decompose_davis_index();
  const auto& table = si::chartable_ghat();
  py::dict d;
  py::dict mult;
  for (std::size_t i = 0; i < table.size(); ++i) mult[py::str(table[i].label.name())] = dec.multiplicities[i];
  d["multiplicities"] = mult;
  d["positive"] = dec.positive ? py::object(py::str(table[*dec.positive].label.name())) : py::none();
  d["negative"] = dec.negative ? py::object(py::str(table[*dec.negative].label.name())) : py::none();
  d["norm"] = dec.norm.to_compact();
  d["min_total_dimension"] = dec.min_total_dimension;
  d["dimension_step"] = dec.dimension_step;
  return d;
}

py::dict spin_nu_json(int dim, const std::string& phat, const std::string& x) {
  const auto pj = si::Json::parse(phat);
  const auto xj = si::Json::parse(x);
  py::dict d;
  if (dim == 4) {
    si::IsolatedFixedPoint4 fp{{}, si::spin_matrix4_from_json(pj)};
    if (!xj.is_array() || xj.size() != 5) throw si::ParseError("x must have 5 coordinates");
    si::HyperboloidPoint4<double> xd{};
    for (std::size_t i = 0; i < 5; ++i) {
      fp.x[i] = si::golden_from_json(xj[i]);
      xd[i] = fp.x[i].to_double();
    }
    const auto nu = si::nu_isolated_4d(fp);
    const auto& a = fp.phi_hat;
    const si::SpinMatrix4<double> m{si::quaternion_cast<double>(a.a), si::quaternion_cast<double>(a.b),
                                    si::quaternion_cast<double>(a.c), si::quaternion_cast<double>(a.d)};
    d["nu"] = nu.to_compact();
    d["value"] = nu.re().to_double();
    d["oracle"] = si::nu_numeric_oracle(m, xd);
  } else if (dim == 2) {
    const auto phi = si::spin_matrix2_from_json(pj);
    if (!xj.is_array() || xj.size() != 3) throw si::ParseError("x must have 3 coordinates");
    si::HyperboloidPoint2<si::GoldenNumber> pt;
    si::HyperboloidPoint2<double> xd{};
    for (std::size_t i = 0; i < 3; ++i) {
      pt[i] = si::golden_from_json(xj[i]);
      xd[i] = pt[i].to_double();
    }
    const auto nu = si::nu_isolated_2d(phi, pt);
    auto c = [](const si::GoldenComplex& z) { return std::complex<double>(z.re().to_double(), z.im().to_double()); };
    d["nu"] = nu.to_compact();
    d["value"] = c(nu);
    d["oracle"] = si::nu_numeric_oracle_2d({c(phi.a), c(phi.b), c(phi.c), c(phi.d)}, xd);
  } else {
    throw si::DomainError("dim must be 2 or 4");
  }
  return d;
}

py::list verify() {
  py::list out;
  for (const auto& r : si::run_verification_suite()) {
    py::dict d;
    d["check"] = r.name;
    d["status"] = r.passed ? "pass" : "fail";
    d["detail"] = r.detail;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spin-number and G-hat character computations";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const si::Json::exception& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });
  // Later registrations are tried first, so subclasses follow the base.
  auto& base = py::register_exception<si::Error>(m, "SpinIndexError", PyExc_RuntimeError);
  py::register_exception<si::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<si::DataInconsistency>(m, "DataInconsistency", base.ptr());
  py::register_exception<si::NonIsolatedFixedPoint>(m, "NonIsolatedFixedPoint", base.ptr());
  py::register_exception<si::InconsistentInput>(m, "InconsistentInput", base.ptr());

  py::class_<si::GoldenNumber>(m, "GoldenNumber")
      .def(py::init([](long a, long b) { return si::GoldenNumber(si::BigRational(a), si::BigRational(b)); }),
           py::arg("a") = 0, py::arg("b") = 0)
      .def_static("parse", &si::GoldenNumber::parse)
      .def_static("tau", &si::GoldenNumber::tau)
      .def_static("sqrt5", &si::GoldenNumber::sqrt5)
      .def_property_readonly("a", [](const si::GoldenNumber& x) { return x.a().get_str(); })
      .def_property_readonly("b", [](const si::GoldenNumber& x) { return x.b().get_str(); })
      .def("galois", &si::GoldenNumber::galois)
      .def("inverse", &si::GoldenNumber::inverse)
      .def("sign", &si::GoldenNumber::sign)
      .def("__float__", &si::GoldenNumber::to_double)
      .def("__str__", &si::GoldenNumber::to_compact)
      .def("__repr__", [](const si::GoldenNumber& x) { return "GoldenNumber('" + x.to_compact() + "')"; })
      .def("__hash__", [](const si::GoldenNumber& x) { return std::hash<si::GoldenNumber>{}(x); })
      .def("__neg__", [](const si::GoldenNumber& x) { return -x; })
      .def("__add__", [](const si::GoldenNumber& x, const si::GoldenNumber& y) { return x + y; })
      .def("__sub__", [](const si::GoldenNumber& x, const si::GoldenNumber& y) { return x - y; })
      .def("__mul__", [](const si::GoldenNumber& x, const si::GoldenNumber& y) { return x * y; })
      .def("__truediv__", [](const si::GoldenNumber& x, const si::GoldenNumber& y) { return x / y; })
      .def("__eq__", [](const si::GoldenNumber& x, const si::GoldenNumber& y) { return x == y; })
      .def("__lt__", [](const si::GoldenNumber& x, const si::GoldenNumber& y) { return x < y; });

  m.def("icosa_table", &icosa_table, "2I classes with their character values");
  m.def("ghat_classes", &ghat_classes, "the 54 classes in canonical order");
  m.def("ghat_chartable", &ghat_chartable, "the 54 irreducible characters");
  m.def("check_orthogonality", &orthogonality);
  m.def("spin_davis", &spin_davis, "spin numbers on all 54 classes");
  m.def("spin_decompose", &spin_decompose, "multiplicities of the index character");
  m.def("_spin_nu_json", &spin_nu_json, py::arg("dim"), py::arg("phat"), py::arg("x"));
  m.def("verify", &verify, "the full invariant suite");
  m.def("verification_checks", &si::verification_check_names);
}
