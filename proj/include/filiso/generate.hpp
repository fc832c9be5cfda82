#pragma once

#include "filiso/admissibility.hpp"
#include "filiso/lattice.hpp"
#include "filiso/rng.hpp"

namespace filiso {

// Shared instance generators so that CLI campaigns, fixtures and tests all
// draw from the same seeded distributions.

Int random_prime(Rng& rng);

// Distinct eigenvalues u*p^e with small units and |e| <= 2, random integer
// eigenbasis.
Isocrystal random_split_isocrystal(Rng& rng, long dim, const Int& p);

// Identity perturbed by a unimodular-at-p integer matrix times diagonal
// p-powers with exponents in [-3, 3].
Lattice random_lattice(Rng& rng, long dim, const Int& p);

// Integral dominant vector above the Newton type of iso, with the same sum:
// the Newton vector pushed up by a few random dominance-raising transfers.
TypeVector hodge_type_above_newton(Rng& rng, const Isocrystal& iso);

// Random full flag (integer entries in [-9, 9], rejection on singularity)
// arranged into a filtration of the given type.
Filtration random_flag_of_type(Rng& rng, const TypeVector& mu);

// Random filtration with small rational weights, for the filtration
// calculus itself.
Filtration random_filtration(Rng& rng, long dim);

// Split isocrystal plus an arbitrary integral Hodge filtration; mixed
// admissibility status.
FilteredIsocrystal random_filtered(Rng& rng, long dim, const Int& p);

// Rejection-samples flags of a dominance-compatible type until weakly
// admissible.
FilteredIsocrystal random_admissible(Rng& rng, long dim, const Int& p);

// Stable test filtration: random small weights on the eigenlines.
Filtration random_stable_xi(Rng& rng, const FilteredIsocrystal& fi);

// Filtration by a random chain of weakly admissible eigen-spans with random
// increasing weights; always a member of the projection target set.
Filtration random_wa_chain_xi(Rng& rng, const FilteredIsocrystal& fi,
                              const SplitTables& tables);

}  // namespace filiso
