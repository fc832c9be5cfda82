#pragma once

#include <optional>
#include <vector>

#include "filiso/admissibility.hpp"

namespace filiso {

struct FarguesPiece {
  Rat weight;       // slope of the graded piece
  Subspace step;    // flag step in the original space, weakly admissible
  bool semistable;  // re-derived by enumeration over wa subobjects
};

struct FarguesResult {
  Filtration filtration;            // F_F
  std::vector<FarguesPiece> pieces; // flag order, weights strictly decreasing
};

// True when (W, phi|W, F_H|W) is weakly admissible and W is stable.
bool is_wa_subobject(const FilteredIsocrystal& fi, const Subspace& w);

// deg = -deg(F_H|W) for a weakly admissible subobject; asserts agreement
// with -vp(det(phi|W)) and with deg(F_N^iota|W).
// Throws MathError("not a wa subobject") otherwise.
Rat fargues_degree(const FilteredIsocrystal& fi, const Subspace& w);

// Harder-Narasimhan flag of a weakly admissible object for the slope
// -deg(F_H|W)/dim W over weakly admissible subobjects, recursing on
// quotient objects.  Requires the split model and a weakly admissible input.
FarguesResult fargues_filtration(const FilteredIsocrystal& fi);

// For each sample Xi: decides membership in the set of filtrations by wa
// stable subspaces twice (step-wise verdicts, and the scalar equality
// <F_H,Xi> = <F_N,Xi>); the two must agree, else InternalError.  For members
// checks dist_sq(F_N^iota, F_F) <= dist_sq(F_N^iota, Xi).  Returns false on
// any failed distance comparison.
bool check_projection_optimality(const FilteredIsocrystal& fi,
                                 const FarguesResult& result,
                                 const std::vector<Filtration>& samples);

// The perturbation inequality from the projection argument:
//   eps^2 dim W + 2 eps (delta_i dim W - deg(F_N^iota|W)) >= 0
// for every wa subspace W of every graded piece, plus the exact equality
// delta_i dim = deg(F_N^iota|piece) on the full piece.
// eps must satisfy 0 < eps < gap/2 where gap is the least weight difference.
bool check_perturbation_inequality(const FilteredIsocrystal& fi,
                                   const FarguesResult& result, const Rat& eps);

enum class TensorVerdict {
  equal,              // F_F(fi1 (x) fi2) = F_F(fi1) (x) F_F(fi2)
  mismatch,
  skipped_collision,  // eigenvalue products collided; not a failure
};

TensorVerdict fargues_tensor_check(const FilteredIsocrystal& a,
                                   const FilteredIsocrystal& b);

}  // namespace filiso
