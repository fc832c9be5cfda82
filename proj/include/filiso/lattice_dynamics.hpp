#pragma once

#include <optional>
#include <vector>

#include "filiso/admissibility.hpp"
#include "filiso/lattice.hpp"

namespace filiso {

// L + F = sum over weights g of p^{-g} (F^g cap L), for integral weights.
// This is the vertex-level +-operation; alpha(L) = phi(L) + F_H, and a
// fixed lattice is exactly a strongly divisible one.
Lattice plus_op(const Lattice& l, const Filtration& f);

Lattice alpha(const FilteredIsocrystal& fi, const Lattice& l);

bool is_strongly_divisible(const FilteredIsocrystal& fi, const Lattice& l);

struct OrbitReport {
  enum class Status { fixed_point, bounded_evidence, diverging };
  Status status = Status::bounded_evidence;
  std::optional<Lattice> fixed;  // the fixed lattice, when found
  long steps = 0;                // alpha applications performed
  long max_radius = 0;
  long first_exit_step = -1;     // diverging only
  long radius_bound = 0;
  std::vector<long> trace;       // |relative_position(L0, alpha^k L0)|_1 per step
};

// Iterates alpha from start; fixed point on exact lattice equality with the
// image, diverging when the trace exceeds radius_bound, otherwise bounded
// evidence at budget exhaustion.  Iteration is a semi-decision procedure:
// alpha is non-expanding, not contracting, so the exact admissibility
// verdict always comes from the enumeration side.
OrbitReport orbit_probe(const FilteredIsocrystal& fi, const Lattice& start,
                        long max_steps, long radius_bound);

// 20 * (1 + max |Hodge weight|) * dim
long default_radius_bound(const FilteredIsocrystal& fi);
inline constexpr long kDefaultOrbitSteps = 200;

// Requires both inputs strongly divisible; checks that the product lattice
// is fixed in the tensor object.
bool sd_tensor_check(const FilteredIsocrystal& a, const Lattice& la,
                     const FilteredIsocrystal& b, const Lattice& lb);

}  // namespace filiso
