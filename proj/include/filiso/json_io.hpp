#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "filiso/admissibility.hpp"
#include "filiso/fargues.hpp"
#include "filiso/lattice.hpp"
#include "filiso/lattice_dynamics.hpp"

namespace filiso {

using json = nlohmann::json;

// Rationals travel as canonical "a" / "a/b" strings; integers are accepted
// on input.
json rat_to_json(const Rat& x);
Rat rat_from_json(const json& j);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j);

json subspace_to_json(const Subspace& s);

json typevec_to_json(const TypeVector& t);
TypeVector typevec_from_json(const json& j);

json filtration_to_json(const Filtration& f);
Filtration filtration_from_json(const json& j);

// On-disk instance: {"p": ..., "phi": [[...]], "eigvals": [...],
// "eigbasis": [[...]], "hodge": {...}, "lattice": [[...]]}, every block
// beyond p and phi optional.
struct InstanceDoc {
  Int p;
  Mat phi;
  std::optional<SplitData> split;
  std::optional<Filtration> hodge;
  std::optional<Mat> lattice;
};

json instance_to_json(const InstanceDoc& doc);
InstanceDoc instance_from_json(const json& j);

Isocrystal instance_iso(const InstanceDoc& doc);
FilteredIsocrystal instance_filtered(const InstanceDoc& doc);
Lattice instance_lattice(const InstanceDoc& doc);  // standard lattice default

InstanceDoc doc_of(const FilteredIsocrystal& fi);

json verdict_to_json(const WaVerdict& v);
json hn_to_json(const HnResult& r);
json fargues_to_json(const FarguesResult& r);
json orbit_to_json(const OrbitReport& r);

// FNV-1a over the canonical dump; embedded in reports for reproducibility.
std::string json_hash(const json& j);

}  // namespace filiso
