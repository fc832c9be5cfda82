#include "filiso/lattice_dynamics.hpp"

#include <cstdlib>

namespace filiso {

namespace {

long require_integral_weight(const Rat& w) {
  if (!is_integer(w)) throw ModelError("Gamma=Z required");
  return to_long(w);
}

}  // namespace

Lattice plus_op(const Lattice& l, const Filtration& f) {
  if (f.ambient() != l.ambient()) throw DimensionError("ambient mismatch");
  Mat gens(0, l.ambient());
  for (const auto& [w, s] : f.breakpoints()) {
    long g = require_integral_weight(w);
    Mat part = l.intersection_basis(s);
    gens = gens.vstack(part.scaled(p_power(l.prime(), -g)));
  }
  return lattice_from_generators(gens, l.prime());
}

Lattice alpha(const FilteredIsocrystal& fi, const Lattice& l) {
  if (fi.iso().p() != l.prime()) throw MathError("prime mismatch");
  return plus_op(l.apply(fi.iso().phi()), fi.hodge());
}

bool is_strongly_divisible(const FilteredIsocrystal& fi, const Lattice& l) {
  return alpha(fi, l) == l;
}

long default_radius_bound(const FilteredIsocrystal& fi) {
  long maxw = 0;
  for (const auto& [w, s] : fi.hodge().breakpoints()) {
    long g = std::labs(require_integral_weight(w));
    if (g > maxw) maxw = g;
  }
  return 20 * (1 + maxw) * fi.dim();
}

OrbitReport orbit_probe(const FilteredIsocrystal& fi, const Lattice& start,
                        long max_steps, long radius_bound) {
  OrbitReport rep;
  rep.radius_bound = radius_bound;
  Lattice cur = start;
  for (long step = 0; step < max_steps; ++step) {
    Lattice next = alpha(fi, cur);
    if (next == cur) {
      rep.status = OrbitReport::Status::fixed_point;
      rep.fixed = cur;
      rep.steps = step;
      return rep;
    }
    cur = next;
    long r = 0;
    for (long e : relative_position(start, cur)) r += std::labs(e);
    rep.trace.push_back(r);
    if (r > rep.max_radius) rep.max_radius = r;
    rep.steps = step + 1;
    if (r > radius_bound) {
      rep.status = OrbitReport::Status::diverging;
      rep.first_exit_step = step + 1;
      return rep;
    }
  }
  rep.status = OrbitReport::Status::bounded_evidence;
  return rep;
}

bool sd_tensor_check(const FilteredIsocrystal& a, const Lattice& la,
                     const FilteredIsocrystal& b, const Lattice& lb) {
  if (!is_strongly_divisible(a, la) || !is_strongly_divisible(b, lb))
    throw MathError("inputs must be strongly divisible");
  TensorIso t = tensor_isocrystal(a.iso(), b.iso());
  FilteredIsocrystal prod(t.iso, tensor_filtration(a.hodge(), b.hodge()));
  return is_strongly_divisible(prod, Lattice::tensor(la, lb));
}

}  // namespace filiso
