#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "okdh/builtin.hpp"
#include "okdh/io.hpp"
#include "okdh/measure.hpp"
#include "okdh/okounkov.hpp"
#include "okdh/restricted_volume.hpp"

namespace py = pybind11;
using namespace okdh;

// Rationals cross the boundary as fractions.Fraction; ints and "p/q"
// strings are accepted on the way in. Floats are refused.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    static const auto fraction = py::module_::import("fractions").attr("Fraction");
    const bool ok = PyLong_Check(src.ptr()) || PyUnicode_Check(src.ptr()) ||
                    py::isinstance(src, fraction);
    if (!ok) return false;
    try {
      value = parse_rational(py::str(src).cast<std::string>());
    } catch (const ValidationError&) {
      return false;
    }
    return true;
  }

  static handle cast(const Rational& q, return_value_policy, handle) {
    static const auto fraction = py::module_::import("fractions").attr("Fraction");
    py::int_ num(py::reinterpret_steal<py::object>(PyLong_FromString(q.get_num().get_str().c_str(), nullptr, 10)));
    py::int_ den(py::reinterpret_steal<py::object>(PyLong_FromString(q.get_den().get_str().c_str(), nullptr, 10)));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

IntegerVector to_integers(const std::vector<long>& v) { return {v.begin(), v.end()}; }

py::dict piecewise_dict(const PiecewisePolynomial& p) {
  py::list pieces;
  for (const auto& q : p.pieces) pieces.append(py::cast(q.coefficients()));
  py::dict d;
  d["breakpoints"] = p.breakpoints;
  d["pieces"] = pieces;
  return d;
}

py::dict measure_dict(const PiecewisePolyMeasure& m) {
  py::dict d = piecewise_dict(m.density());
  if (m.atom()) {
    d["atom"] = py::make_tuple(m.atom()->location, m.atom()->mass);
  } else {
    d["atom"] = py::none();
  }
  d["expectation"] = m.expectation();
  return d;
}

std::vector<std::pair<Rational, Rational>> atoms(const DiscreteMeasure& m) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& a : m.atoms()) out.emplace_back(a.location, a.mass);
  return out;
}

}  // namespace

PYBIND11_MODULE(_okdh, m) {
  m.doc() = "Exact Duistermaat-Heckman measures, Okounkov bodies and restricted volumes";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<ToricModel>(m, "ToricModel")
      .def_static("projective_space", &ToricModel::projective_space, py::arg("d"), py::arg("k") = 1)
      .def_static("hirzebruch", &ToricModel::hirzebruch, py::arg("a"), py::arg("b"))
      .def_static("product", &ToricModel::product)
      .def_static(
          "from_vertices",
          [](const std::vector<RationalVector>& vertices) {
            if (vertices.empty()) throw ValidationError("no vertices given");
            return ToricModel::from_polytope(RationalPolytope::from_vrep(vertices.front().size(), vertices));
          },
          py::arg("vertices"))
      .def_static(
          "from_json", [](const std::string& text) { return model_from_json(Json::parse(text)); },
          py::arg("text"))
      .def_property_readonly("dim", &ToricModel::dim)
      .def_property_readonly("vertices", [](const ToricModel& x) { return x.polytope().vertices(); })
      .def("h0", &ToricModel::h0, py::arg("m"))
      .def("graded_piece",
           [](const ToricModel& x, std::int64_t level) {
             std::vector<std::vector<long>> out;
             for (const auto& u : x.graded_piece(level).basis) {
               auto& row = out.emplace_back();
               for (const auto& c : u.coords) row.push_back(c.get_si());
             }
             return out;
           })
      .def("volume_of_L", &ToricModel::volume_of_L)
      .def("okounkov_body", [](const ToricModel& x) { return okounkov_body(x).vertices(); })
      .def("to_json", [](const ToricModel& x) { return model_to_json(x).dump(); });

  py::class_<WeightFiltration>(m, "WeightFiltration")
      .def(py::init([](const ToricModel& model, const std::vector<std::pair<RationalVector, Rational>>& pieces) {
             std::vector<AffinePiece> ps;
             for (const auto& [a, b] : pieces) ps.push_back({a, b});
             return WeightFiltration(model, std::move(ps));
           }),
           py::arg("model"), py::arg("pieces"),
           "pieces: list of (a, b) giving w(u, m) = min(<a, u> + b m)")
      .def_static("zero", &WeightFiltration::zero)
      .def_static(
          "from_json",
          [](const std::string& text, const ToricModel& model) { return filtration_from_json(Json::parse(text), model); },
          py::arg("text"), py::arg("model"))
      .def_property_readonly("model", &WeightFiltration::model)
      .def_property_readonly("dim", &WeightFiltration::dim)
      .def("vanishing_numbers", [](const WeightFiltration& f, std::int64_t level) { return f.vanishing_numbers(level).values; })
      .def("filtered_dim", &WeightFiltration::filtered_dim, py::arg("m"), py::arg("t"))
      .def("a_max", &WeightFiltration::a_max)
      .def("a_min", &WeightFiltration::a_min)
      .def("mass_plus", &WeightFiltration::mass_plus)
      .def("a_max_limit", &WeightFiltration::a_max_limit)
      .def("to_json", [](const WeightFiltration& f) { return filtration_to_json(f).dump(); });

  m.def("builtin_names", [] {
    std::vector<std::string> names;
    for (const auto& ex : builtin_examples()) names.push_back(ex.name);
    return names;
  });
  m.def("builtin", [](const std::string& name) { return builtin_example(name).filtration; });

  m.def("nu_m", [](const WeightFiltration& f, std::int64_t level) { return atoms(nu_m(f, level)); });
  m.def("expectation_nu_m", [](const WeightFiltration& f, std::int64_t level) { return nu_m(f, level).expectation(); });
  m.def("limit_measure_nu", [](const WeightFiltration& f) { return measure_dict(limit_measure_nu(f)); });
  m.def("limit_measure_mu", [](const WeightFiltration& f) { return measure_dict(limit_measure_mu(f)); });
  m.def("kolmogorov_to_limit", [](const WeightFiltration& f, std::int64_t level) {
    return kolmogorov_distance(Measure(nu_m(f, level)), Measure(limit_measure_nu(f)));
  });
  m.def("convergence_sweep", [](const WeightFiltration& f, const std::vector<std::int64_t>& ms) {
    std::vector<std::tuple<std::int64_t, Rational, Rational>> out;
    for (const auto& r : convergence_sweep(f, ms)) out.emplace_back(r.m, r.expectation, r.kolmogorov);
    return out;
  });

  m.def(
      "concave_transform",
      [](const WeightFiltration& f, const RationalVector& x) { return concave_transform_eval(f, x); },
      py::arg("filtration"), py::arg("x"));
  m.def("slice_body", [](const WeightFiltration& f, const Rational& t) { return slice_body(f, t).vertices(); });
  m.def("slice_volume", [](const WeightFiltration& f, const Rational& t) { return slice_volume_function(f)(t); });
  m.def("slice_volume_function", [](const WeightFiltration& f) { return piecewise_dict(slice_volume_function(f).piecewise()); });
  m.def("filtered_body_volume", &filtered_body_volume);
  m.def("semigroup_oracle_volume", [](const WeightFiltration& f, const Rational& t, std::int64_t m_max) {
    return volume(semigroup_oracle(f, t, m_max));
  });

  py::class_<DivisorData>(m, "DivisorData")
      .def(py::init([](const ToricModel& model, const std::vector<long>& normal, long offset) {
             return DivisorData(model, to_integers(normal), Integer(offset));
           }),
           py::arg("model"), py::arg("normal"), py::arg("offset") = 0)
      .def_static("from_filtration", &DivisorData::from_filtration)
      .def_property_readonly("filtration", &DivisorData::filtration);

  m.def("restricted_h0", [](const DivisorData& d, std::int64_t level, const Rational& t) {
    return restricted_h0(d, level, t).count;
  });
  m.def("restricted_volume", &restricted_volume);
  m.def("volume_function", [](const DivisorData& d, const Rational& t) { return volume_function(d)(t); });
  m.def("verify_theorem_5", [](const DivisorData& d) {
    const auto r = verify_theorem_5(d);
    return py::make_tuple(r.passed(), r.to_string());
  });
}
