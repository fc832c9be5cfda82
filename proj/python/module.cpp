// Python bindings for the main operations.  Structured values cross the
// boundary as plain dicts/lists with the same shape as the CLI's JSON
// files, so the two front ends stay interchangeable.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "filiso/fargues.hpp"
#include "filiso/generate.hpp"
#include "filiso/json_io.hpp"
#include "filiso/lattice_dynamics.hpp"
#include "filiso/mazur.hpp"
#include "filiso/version.hpp"

namespace py = pybind11;
using namespace filiso;

namespace {

json to_json(const py::handle& obj) {
  py::object dumps = py::module_::import("json").attr("dumps");
  return json::parse(dumps(obj).cast<std::string>());
}

py::object from_json(const json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(py::str(j.dump()));
}

InstanceDoc doc_from(const py::dict& d) { return instance_from_json(to_json(d)); }

py::object py_newton(const py::dict& instance) {
  NewtonData nd = newton(instance_iso(doc_from(instance)));
  json j{{"slopes", typevec_to_json(nd.slopes)}};
  if (nd.fil) {
    j["newton_fil"] = filtration_to_json(*nd.fil);
    j["newton_fil_opposed"] = filtration_to_json(*nd.fil_opposed);
  }
  return from_json(j);
}

py::object py_check_wa(const py::dict& instance) {
  return from_json(verdict_to_json(
      is_weakly_admissible(instance_filtered(doc_from(instance)))));
}

py::object py_hn(const py::dict& instance) {
  return from_json(hn_to_json(hn_with_pieces(instance_filtered(doc_from(instance)))));
}

py::object py_fargues(const py::dict& instance) {
  return from_json(
      fargues_to_json(fargues_filtration(instance_filtered(doc_from(instance)))));
}

py::object py_probe(const py::dict& instance, long steps, long radius) {
  InstanceDoc doc = doc_from(instance);
  FilteredIsocrystal fi = instance_filtered(doc);
  if (radius <= 0) radius = default_radius_bound(fi);
  return from_json(orbit_to_json(orbit_probe(fi, instance_lattice(doc), steps, radius)));
}

bool py_strongly_divisible(const py::dict& instance) {
  InstanceDoc doc = doc_from(instance);
  return is_strongly_divisible(instance_filtered(doc), instance_lattice(doc));
}

py::object py_mazur(const py::dict& instance) {
  InstanceDoc doc = doc_from(instance);
  MazurOutcome out = mazur_check(instance_iso(doc), instance_lattice(doc));
  return from_json(json{{"mu", typevec_to_json(out.mu)},
                        {"nu", typevec_to_json(out.nu)},
                        {"ok", out.ok}});
}

py::object py_adm_search(const py::dict& instance, const py::list& mu,
                         long trials, std::uint64_t seed) {
  InstanceDoc doc = doc_from(instance);
  AdmSearchResult r =
      adm_search(instance_iso(doc), typevec_from_json(to_json(mu)), trials, seed);
  json j{{"reason", r.reason}, {"trials_used", r.trials_used}};
  if (r.filtration) j["filtration"] = filtration_to_json(*r.filtration);
  return from_json(j);
}

py::object py_gen(long dim, long p, std::uint64_t seed, bool admissible) {
  Rng rng(seed);
  InstanceDoc doc;
  if (admissible) {
    doc = doc_of(random_admissible(rng, dim, Int(p)));
  } else {
    Isocrystal iso = random_split_isocrystal(rng, dim, Int(p));
    TypeVector mu = hodge_type_above_newton(rng, iso);
    doc = doc_of(FilteredIsocrystal(iso, random_flag_of_type(rng, mu)));
  }
  doc.lattice = Mat::identity(dim);
  return from_json(instance_to_json(doc));
}

std::string py_vp(const std::string& x, long p) {
  return std::to_string(vp(rat_parse(x), Int(p)));
}

py::object py_newton_slopes(const py::list& coeffs, long p) {
  std::vector<Rat> c;
  for (const auto& e : coeffs) c.push_back(rat_from_json(to_json(e)));
  json out = json::array();
  for (const Rat& s : newton_slopes(c, Int(p))) out.push_back(rat_to_json(s));
  return from_json(out);
}

py::object py_relative_position(const py::list& l1, const py::list& l2, long p) {
  Lattice a(mat_from_json(to_json(l1)), Int(p));
  Lattice b(mat_from_json(to_json(l2)), Int(p));
  return from_json(json(relative_position(a, b)));
}

bool py_dominance_leq(const py::list& a, const py::list& b) {
  return dominance_leq(typevec_from_json(to_json(a)), typevec_from_json(to_json(b)));
}

std::string py_scalar_product(const py::dict& f1, const py::dict& f2) {
  return rat_str(scalar_product(filtration_from_json(to_json(f1)),
                                filtration_from_json(to_json(f2))));
}

std::string py_dist_sq(const py::dict& f1, const py::dict& f2) {
  return rat_str(dist_sq(filtration_from_json(to_json(f1)),
                         filtration_from_json(to_json(f2))));
}

py::object py_tensor_filtration(const py::dict& f1, const py::dict& f2) {
  return from_json(filtration_to_json(tensor_filtration(
      filtration_from_json(to_json(f1)), filtration_from_json(to_json(f2)))));
}

}  // namespace

PYBIND11_MODULE(_filiso, m) {
  m.doc() = "exact filtered-isocrystal computations (GL_n over F_p)";
  m.attr("__version__") = kVersion;

  m.def("vp", &py_vp, py::arg("x"), py::arg("p"),
        "p-adic valuation of a rational given as a string");
  m.def("newton_slopes", &py_newton_slopes, py::arg("monic_coeffs"), py::arg("p"),
        "Newton polygon slopes, ascending; coefficients in descending degree");
  m.def("relative_position", &py_relative_position, py::arg("l1"), py::arg("l2"),
        py::arg("p"));
  m.def("dominance_leq", &py_dominance_leq, py::arg("a"), py::arg("b"));
  m.def("scalar_product", &py_scalar_product, py::arg("f1"), py::arg("f2"));
  m.def("dist_sq", &py_dist_sq, py::arg("f1"), py::arg("f2"));
  m.def("tensor_filtration", &py_tensor_filtration, py::arg("f1"), py::arg("f2"));

  m.def("newton", &py_newton, py::arg("instance"));
  m.def("check_wa", &py_check_wa, py::arg("instance"));
  m.def("hn", &py_hn, py::arg("instance"));
  m.def("fargues", &py_fargues, py::arg("instance"));
  m.def("laffaille_probe", &py_probe, py::arg("instance"),
        py::arg("steps") = kDefaultOrbitSteps, py::arg("radius") = 0);
  m.def("is_strongly_divisible", &py_strongly_divisible, py::arg("instance"));
  m.def("mazur_check", &py_mazur, py::arg("instance"));
  m.def("adm_search", &py_adm_search, py::arg("instance"), py::arg("mu"),
        py::arg("trials") = 100, py::arg("seed") = 17);
  m.def("gen_instance", &py_gen, py::arg("dim"), py::arg("p") = 2,
        py::arg("seed") = 17, py::arg("admissible") = false);

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", PyExc_ValueError);
}
