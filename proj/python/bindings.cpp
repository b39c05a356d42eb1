// Results cross the boundary as the same JSON the CLI prints; the Python
// package decodes them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "waringlab/error.hpp"
#include "waringlab/suites.hpp"

namespace py = pybind11;
using namespace waringlab;

namespace {

PointSet to_point_set(const std::vector<std::vector<std::string>>& points) {
  if (points.empty()) throw PreconditionError("point set is empty");
  PointSet s(static_cast<int>(points.front().size()) - 1);
  for (const auto& p : points) {
    Vector v;
    for (const auto& x : p) v.push_back(parse_scalar(x));
    s.add(std::move(v));
  }
  return s;
}

std::vector<Scalar> to_scalars(const std::vector<std::string>& xs) {
  std::vector<Scalar> out;
  for (const auto& x : xs) out.push_back(parse_scalar(x));
  return out;
}

ParamCurve named_curve(const std::string& name, int r, std::uint64_t seed) {
  if (name == "rnc") return rational_normal_curve(r);
  if (name == "gap") return gap_curve(r);
  if (name == "random") {
    Rng rng(seed);
    return random_curve(r, rng);
  }
  return parse_curve(name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rank and decomposition checks (JSON-returning core)";
  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DegenerateDraw>(m, "DegenerateDraw", base.ptr());

  m.def("rank_profile", [](const std::string& form) { return to_json(rank_profile(parse_binary_form(form))).dump(); },
        py::arg("form"));

  m.def(
      "non_uniqueness_set",
      [](const std::string& form, int t, int samples, std::uint64_t seed, long max_coeff) {
        const BinaryForm f = parse_binary_form(form);
        if (t <= 0) t = rank_profile(f).rank;
        if (samples <= 0) samples = default_max_samples(f.degree(), std::min(t, f.degree()));
        py::gil_scoped_release release;
        return to_json(non_uniqueness_set(f, t, samples, seed, max_coeff)).dump();
      },
      py::arg("form"), py::arg("t") = 0, py::arg("samples") = 0, py::arg("seed") = 7,
      py::arg("max_coeff") = Rng::kDefaultMaxCoeff);

  m.def("suite_ids", [] { return suite_ids(); });

  m.def(
      "run_suite",
      [](const std::string& id, std::uint64_t seed, int samples, long max_coeff) {
        SuiteOptions o;
        o.seed = seed;
        o.samples = samples;
        o.max_coeff = max_coeff;
        py::gil_scoped_release release;
        return to_json(run_suite(id, o)).dump();
      },
      py::arg("id"), py::arg("seed") = 7, py::arg("samples") = 0, py::arg("max_coeff") = Rng::kDefaultMaxCoeff);

  m.def(
      "h_values", [](const std::vector<std::vector<std::string>>& pts, int t) { return to_json(h_values(to_point_set(pts), t)).dump(); },
      py::arg("points"), py::arg("t"));

  m.def(
      "detect_configuration",
      [](const std::vector<std::vector<std::string>>& pts, int d) {
        const PointSet s = to_point_set(pts);
        py::gil_scoped_release release;
        return to_json(detect_configuration(s, d)).dump();
      },
      py::arg("points"), py::arg("d"));

  m.def(
      "mixed_decomposition",
      [](int n, int d, int b, int k, int samples, std::uint64_t seed, long max_coeff) {
        py::gil_scoped_release release;
        const MixedInstance inst = mixed_construct(n, d, b, k, seed, max_coeff);
        const MixedReport rep = mixed_verify(inst, samples, Rng::derive_seed(seed, 1), max_coeff);
        return Json{{"instance", to_json(inst)}, {"verification", to_json(rep)}}.dump();
      },
      py::arg("n"), py::arg("d"), py::arg("b"), py::arg("k"), py::arg("samples") = 12, py::arg("seed") = 7,
      py::arg("max_coeff") = Rng::kDefaultMaxCoeff);

  m.def(
      "span_pair",
      [](const std::string& curve, int r, const std::vector<std::string>& s, const std::vector<std::string>& a,
         std::uint64_t seed) {
        const ParamCurve c = named_curve(curve, r, seed);
        return to_json(construct_span_pair(c, to_scalars(s), to_scalars(a))).dump();
      },
      py::arg("curve"), py::arg("r"), py::arg("s"), py::arg("a"), py::arg("seed") = 7);
}
