#include "filiso/mazur.hpp"

#include "filiso/generate.hpp"

namespace filiso {

TypeVector mu_sharp(const TypeVector& mu) { return mu; }

MazurOutcome mazur_check(const Isocrystal& iso, const Lattice& l) {
  if (iso.p() != l.prime()) throw MathError("prime mismatch");
  if (iso.dim() != l.ambient()) throw DimensionError("ambient mismatch");
  MazurOutcome out;
  std::vector<Rat> mu_entries;
  for (long e : relative_position(l.apply(iso.phi()), l)) mu_entries.emplace_back(e);
  out.mu = TypeVector(std::move(mu_entries));
  out.nu = newton(iso).slopes;
  out.ok = dominance_leq(out.nu, mu_sharp(out.mu));
  return out;
}

AdmSearchResult adm_search(const Isocrystal& iso, const TypeVector& mu,
                           long trials, std::uint64_t seed) {
  if (mu.size() != iso.dim()) throw DimensionError("type length mismatch");
  AdmSearchResult res;
  TypeVector nu = newton(iso).slopes;
  if (!dominance_leq(nu, mu_sharp(mu))) {
    res.reason = "Mazur obstruction";
    return res;
  }
  Rng rng(seed);
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Filtration f = random_flag_of_type(trial, mu);
    res.trials_used = t + 1;
    FilteredIsocrystal fi(iso, f);
    if (!is_weakly_admissible(fi).admissible) continue;
    if (!(type_of(f) == mu)) throw InternalError("flag type mismatch");
    res.filtration = std::move(f);
    res.reason = "found";
    return res;
  }
  res.reason = "no admissible filtration found in " + std::to_string(trials) +
               " trials (search is sound, not complete)";
  return res;
}

}  // namespace filiso
