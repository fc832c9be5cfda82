#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "filiso/admissibility.hpp"
#include "filiso/lattice.hpp"
#include "filiso/rng.hpp"

namespace filiso {

// The sigma-orbit average on types; sigma acts trivially over F_p, so this
// is the identity, kept explicit to match the interface.
TypeVector mu_sharp(const TypeVector& mu);

struct MazurOutcome {
  TypeVector mu;  // relative_position(phi L, L)
  TypeVector nu;  // Newton slopes
  bool ok;        // nu <= mu_sharp(mu) in the dominance order
};

// A false outcome is a theorem violation and must be surfaced with the
// full instance by the caller.
MazurOutcome mazur_check(const Isocrystal& iso, const Lattice& l);

struct AdmSearchResult {
  std::optional<Filtration> filtration;
  std::string reason;
  long trials_used = 0;
};

// Randomized search for a weakly admissible filtration of type mu.
// Sound: every returned filtration is verified exactly.  Not complete:
// over F_p stable subspaces may be everywhere (phi central), in which case
// the search fails as the theory predicts.
AdmSearchResult adm_search(const Isocrystal& iso, const TypeVector& mu,
                           long trials, std::uint64_t seed);

}  // namespace filiso
