#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matchstat/distribution.hpp"
#include "matchstat/errors.hpp"
#include "matchstat/matching.hpp"
#include "matchstat/moments.hpp"
#include "matchstat/sundaram.hpp"

namespace py = pybind11;
using namespace matchstat;

namespace {

using Shape = std::vector<int>;

// Big integers and rationals cross the boundary as decimal strings.
std::vector<std::string> to_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

py::dict moment_dict(const MomentReport& r) {
  py::dict d;
  for (const auto& field : moment_fields()) {
    d[py::str(std::string(field.name))] =
        field_valid(r, field) ? py::object(py::str(to_string(r.*field.value))) : py::none();
  }
  return d;
}

OscillatingTableau from_shapes(const std::vector<Shape>& shapes) {
  std::vector<Partition> parts;
  parts.reserve(shapes.size());
  for (const auto& s : shapes) parts.emplace_back(s);
  return OscillatingTableau(std::move(parts));
}

std::vector<Shape> to_shapes(const OscillatingTableau& t) {
  std::vector<Shape> out;
  for (const auto& p : t.shapes()) out.push_back(p.parts());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Descent statistics of matchings";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_ArithmeticError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Matching>(m, "Matching")
      .def_static("parse", &Matching::parse, py::arg("text"))
      .def_static(
          "from_pairs",
          [](const std::vector<Matching::Pair>& pairs) { return Matching::from_pairs(pairs); },
          py::arg("pairs"))
      .def_static(
          "from_one_line",
          [](const std::vector<int>& one_line) { return Matching::from_one_line(one_line); },
          py::arg("one_line"))
      .def_property_readonly("n", &Matching::n)
      .def("partner", &Matching::partner, py::arg("i"))
      .def("one_line", &Matching::one_line)
      .def("pairs", &Matching::pairs)
      .def("__str__", &Matching::to_string)
      .def("__repr__", [](const Matching& x) { return "Matching('" + x.to_string() + "')"; })
      .def("__eq__", [](const Matching& a, const Matching& b) { return a == b; })
      .def("__hash__", [](const Matching& x) { return py::hash(py::str(x.to_string())); });

  m.def("descent_stats", [](const Matching& x) {
    const auto s = descent_stats(x);
    py::dict d;
    d["des_set"] = s.des_set;
    d["descent_count"] = s.descent_count;
    d["descent_number"] = s.descent_number;
    d["major_index"] = s.major_index;
    return d;
  });
  m.def("enumerate_matchings", &enumerate_matchings, py::arg("n"));
  m.def("sample_uniform", &sample_uniform, py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("_double_factorial", [](long long x) { return double_factorial(x).get_str(); });

  m.def("_closed_form_moments", [](int n) { return moment_dict(closed_form_moments(n)); });
  m.def("_brute_force_moments", [](int n) { return moment_dict(brute_force_moments(n)); });

  m.def("_matching_to_oscillating",
        [](const Matching& x) { return to_shapes(matching_to_oscillating(x).first); });
  m.def("_oscillating_to_matching",
        [](const std::vector<Shape>& shapes) { return oscillating_to_matching(from_shapes(shapes)); });
  m.def("_conjugate_oscillating", [](const std::vector<Shape>& shapes) {
    return to_shapes(conjugate_oscillating(from_shapes(shapes)));
  });
  m.def("conjugate_matching", &conjugate_matching);
  m.def("_classify_position", [](const std::vector<Shape>& shapes, int i) {
    return static_cast<int>(classify_position(from_shapes(shapes), i));
  });

  m.def("_polynomial_by_gf", [](int n) { return to_strings(polynomial_by_gf(n).coeffs); });
  m.def("_polynomial_by_enumeration",
        [](int n) { return to_strings(polynomial_by_enumeration(n).coeffs); });
  m.def("mgf_Wn", &mgf_Wn, py::arg("n"), py::arg("s"));
  m.def("lemma41_lhs", &lemma41_lhs, py::arg("n"), py::arg("s"), py::arg("k_max") = 64);
  m.def("exact_ks_distance", &exact_ks_distance, py::arg("n"));
  m.def(
      "clt_experiment",
      [](int n, long long samples, std::uint64_t seed) {
        CltReport r;
        {
          py::gil_scoped_release release;
          r = clt_experiment(n, samples, seed);
        }
        py::dict d;
        d["n"] = r.n;
        d["num_samples"] = r.num_samples;
        d["seed"] = r.seed;
        d["sample_mean_W"] = r.sample_mean_W;
        d["sample_var_W"] = r.sample_var_W;
        d["ks_distance"] = r.ks_distance;
        d["target_var"] = r.target_var;
        return d;
      },
      py::arg("n"), py::arg("num_samples"), py::arg("seed"));
}
