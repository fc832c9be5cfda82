#pragma once

#include <utility>
#include <vector>

#include "filiso/linalg.hpp"
#include "filiso/scalars.hpp"

namespace filiso {

// Dominant vector: entries sorted decreasing.
struct TypeVector {
  std::vector<Rat> entries;

  explicit TypeVector(std::vector<Rat> e = {});
  long size() const { return static_cast<long>(entries.size()); }
  bool operator==(const TypeVector& o) const { return entries == o.entries; }
  Rat sum() const;
};

// Majorization: equal sums and every prefix sum of a bounded by that of b.
bool dominance_leq(const TypeVector& a, const TypeVector& b);

// A descending weighted flag: breakpoints (w_i, S_i) with weights strictly
// increasing and steps strictly decreasing, S_1 = V.  F^g is the step of the
// smallest breakpoint weight >= g; the full space below the first weight,
// zero above the last.  This is Fil(G)^g = direct sum of G_h over h >= g.
class Filtration {
 public:
  Filtration() : ambient_(0) {}  // the empty-space filtration

  static Filtration trivial(long ambient, const Rat& weight = Rat(0));
  // Validating constructor: breakpoints in canonical form.
  static Filtration from_breakpoints(long ambient,
                                     std::vector<std::pair<Rat, Subspace>> bp);
  // Canonicalizing constructor: any weight order, zero steps dropped,
  // equal consecutive steps merged onto the largest weight.
  static Filtration from_steps(long ambient,
                               std::vector<std::pair<Rat, Subspace>> steps);

  long ambient() const { return ambient_; }
  const std::vector<std::pair<Rat, Subspace>>& breakpoints() const { return bp_; }

  Subspace step_at(const Rat& gamma) const;
  Rat degree() const;
  TypeVector type() const;

  // Weights of the graded jumps, i.e. dim(Gr^{w_i}) = dim S_i - dim S_{i+1}.
  std::vector<std::pair<Rat, long>> graded_dims() const;

  Filtration scale_weights(const Rat& c) const;  // c >= 0
  Filtration shift_weights(const Rat& c) const;

  bool operator==(const Filtration& o) const {
    return ambient_ == o.ambient_ && bp_ == o.bp_;
  }

 private:
  Filtration(long ambient, std::vector<std::pair<Rat, Subspace>> bp)
      : ambient_(ambient), bp_(std::move(bp)) {}
  long ambient_;
  std::vector<std::pair<Rat, Subspace>> bp_;
};

// Weighted direct-sum decomposition; weights strictly increasing, pieces
// independent and jointly spanning.
class Graduation {
 public:
  static Graduation from_pieces(long ambient,
                                std::vector<std::pair<Rat, Subspace>> pieces);
  long ambient() const { return ambient_; }
  const std::vector<std::pair<Rat, Subspace>>& pieces() const { return pieces_; }
  Rat degree() const;  // sum of weight * dim(piece)

 private:
  Graduation(long ambient, std::vector<std::pair<Rat, Subspace>> pieces)
      : ambient_(ambient), pieces_(std::move(pieces)) {}
  long ambient_;
  std::vector<std::pair<Rat, Subspace>> pieces_;
};

// Fil(G)^g = direct sum of pieces of weight >= g.
Filtration fil_of_grad(const Graduation& g);

// (iota G)_g = G_{-g}; involutive.
Graduation iota(const Graduation& g);

// F|W = (F^g cap W), rewritten on W's canonical coordinates.
Filtration restrict_filtration(const Filtration& f, const Subspace& w);

// Image filtration (F^g + W)/W on the complement-coordinate model of V/W.
Filtration quotient_filtration(const Filtration& f, const Subspace& w);

// The double-sum dimension formula for <F1,F2>.
Rat scalar_product(const Filtration& a, const Filtration& b);

// The alternate route: sum over g of g * deg(Gr_{F1}^g(F2)).  Agrees with
// scalar_product exactly; kept as an independent evaluation path.
Rat scalar_product_via_graded(const Filtration& a, const Filtration& b);

Rat norm_sq(const Filtration& a);

// Squared CAT(0) distance |F1|^2 + |F2|^2 - 2<F1,F2>; kept squared so all
// comparisons stay rational.
Rat dist_sq(const Filtration& a, const Filtration& b);

// (F1 (x) F2)^g = sum over g1+g2 >= g of F1^{g1} (x) F2^{g2}, Kronecker
// coordinates (i1,i2) -> i1*dim(V2) + i2.
Filtration tensor_filtration(const Filtration& a, const Filtration& b);

TypeVector type_of(const Filtration& f);

}  // namespace filiso
