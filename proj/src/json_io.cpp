#include "filiso/json_io.hpp"

#include <cstdint>

namespace filiso {

json rat_to_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw MathError("expected rational as string or integer");
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array()) throw MathError("expected matrix as array of arrays");
  std::vector<std::vector<Rat>> rows;
  for (const auto& r : j) {
    std::vector<Rat> row;
    for (const auto& e : r) row.push_back(rat_from_json(e));
    rows.push_back(std::move(row));
  }
  return Mat::from_rows(rows);
}

json subspace_to_json(const Subspace& s) {
  return json{{"ambient", s.ambient()}, {"basis", mat_to_json(s.basis())}};
}

json typevec_to_json(const TypeVector& t) {
  json arr = json::array();
  for (const Rat& x : t.entries) arr.push_back(rat_to_json(x));
  return arr;
}

TypeVector typevec_from_json(const json& j) {
  std::vector<Rat> entries;
  for (const auto& e : j) entries.push_back(rat_from_json(e));
  return TypeVector(std::move(entries));
}

json filtration_to_json(const Filtration& f) {
  json bps = json::array();
  for (const auto& [w, s] : f.breakpoints())
    bps.push_back(json{{"weight", rat_to_json(w)}, {"basis", mat_to_json(s.basis())}});
  return json{{"dim", f.ambient()}, {"breakpoints", std::move(bps)}};
}

Filtration filtration_from_json(const json& j) {
  long dim = j.at("dim").get<long>();
  std::vector<std::pair<Rat, Subspace>> steps;
  for (const auto& bp : j.at("breakpoints")) {
    Rat w = rat_from_json(bp.at("weight"));
    Mat basis = mat_from_json(bp.at("basis"));
    steps.emplace_back(w, Subspace::span(dim, basis));
  }
  return Filtration::from_steps(dim, std::move(steps));
}

namespace {

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw MathError("expected integer");
}

}  // namespace

json instance_to_json(const InstanceDoc& doc) {
  json j{{"p", int_to_json(doc.p)}, {"phi", mat_to_json(doc.phi)}};
  if (doc.split) {
    json vals = json::array();
    for (const Rat& v : doc.split->eigvals) vals.push_back(rat_to_json(v));
    j["eigvals"] = std::move(vals);
    j["eigbasis"] = mat_to_json(doc.split->eigbasis);
  }
  if (doc.hodge) j["hodge"] = filtration_to_json(*doc.hodge);
  if (doc.lattice) j["lattice"] = mat_to_json(*doc.lattice);
  return j;
}

InstanceDoc instance_from_json(const json& j) {
  InstanceDoc doc;
  doc.p = int_from_json(j.at("p"));
  doc.phi = mat_from_json(j.at("phi"));
  if (j.contains("eigvals") != j.contains("eigbasis"))
    throw MathError("eigvals and eigbasis must come together");
  if (j.contains("eigvals")) {
    SplitData sd;
    for (const auto& e : j.at("eigvals")) sd.eigvals.push_back(rat_from_json(e));
    sd.eigbasis = mat_from_json(j.at("eigbasis"));
    doc.split = std::move(sd);
  }
  if (j.contains("hodge")) doc.hodge = filtration_from_json(j.at("hodge"));
  if (j.contains("lattice")) doc.lattice = mat_from_json(j.at("lattice"));
  return doc;
}

Isocrystal instance_iso(const InstanceDoc& doc) {
  return Isocrystal(doc.p, doc.phi, doc.split);
}

FilteredIsocrystal instance_filtered(const InstanceDoc& doc) {
  if (!doc.hodge) throw MathError("instance has no hodge filtration");
  return FilteredIsocrystal(instance_iso(doc), *doc.hodge);
}

Lattice instance_lattice(const InstanceDoc& doc) {
  if (doc.lattice) return Lattice(*doc.lattice, doc.p);
  return Lattice::standard(doc.phi.rows(), doc.p);
}

InstanceDoc doc_of(const FilteredIsocrystal& fi) {
  InstanceDoc doc;
  doc.p = fi.iso().p();
  doc.phi = fi.iso().phi();
  if (fi.iso().is_split()) doc.split = fi.iso().split();
  doc.hodge = fi.hodge();
  return doc;
}

json verdict_to_json(const WaVerdict& v) {
  json j{{"admissible", v.admissible}};
  if (v.witness)
    j["witness"] = json{{"kind", "subspace"}, {"basis", mat_to_json(v.witness->basis())}};
  if (v.degree_mismatch)
    j["witness"] = json{{"kind", "degree_mismatch"},
                        {"hodge_degree", rat_to_json(v.degree_mismatch->first)},
                        {"newton_degree", rat_to_json(v.degree_mismatch->second)}};
  return j;
}

json hn_to_json(const HnResult& r) {
  json pieces = json::array();
  for (const auto& p : r.pieces)
    pieces.push_back(json{{"slope", rat_to_json(p.slope)},
                          {"dim", p.step.dim()},
                          {"semistable", p.semistable}});
  return json{{"filtration", filtration_to_json(r.filtration)},
              {"pieces", std::move(pieces)}};
}

json fargues_to_json(const FarguesResult& r) {
  json pieces = json::array();
  for (const auto& p : r.pieces)
    pieces.push_back(json{{"weight", rat_to_json(p.weight)},
                          {"dim", p.step.dim()},
                          {"semistable", p.semistable}});
  return json{{"filtration", filtration_to_json(r.filtration)},
              {"pieces", std::move(pieces)}};
}

json orbit_to_json(const OrbitReport& r) {
  json j;
  switch (r.status) {
    case OrbitReport::Status::fixed_point: j["status"] = "fixed_point"; break;
    case OrbitReport::Status::bounded_evidence: j["status"] = "bounded_evidence"; break;
    case OrbitReport::Status::diverging: j["status"] = "diverging"; break;
  }
  j["steps"] = r.steps;
  j["max_radius"] = r.max_radius;
  j["radius_bound"] = r.radius_bound;
  if (r.status == OrbitReport::Status::diverging)
    j["first_exit_step"] = r.first_exit_step;
  if (r.fixed) j["fixed_lattice"] = mat_to_json(r.fixed->basis());
  j["trace"] = r.trace;
  return j;
}

std::string json_hash(const json& j) {
  std::string s = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace filiso
