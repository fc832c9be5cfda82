#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "filiso/filtration.hpp"
#include "filiso/isocrystal.hpp"

namespace filiso {

// An isocrystal together with its Hodge filtration on the same space.
class FilteredIsocrystal {
 public:
  FilteredIsocrystal(Isocrystal iso, Filtration hodge);
  const Isocrystal& iso() const { return iso_; }
  const Filtration& hodge() const { return hodge_; }
  long dim() const { return iso_.dim(); }

 private:
  Isocrystal iso_;
  Filtration hodge_;
};

struct WaVerdict {
  bool admissible = false;
  // exactly one witness field is set when not admissible
  std::optional<Subspace> witness;                    // deg(F_H|W) > deg(F_N|W)
  std::optional<std::pair<Rat, Rat>> degree_mismatch; // (deg F_H, deg F_N)
};

// Per-eigen-subset degree tables for a split filtered isocrystal; the whole
// stable-subspace quantifier reduces to lookups here.  mask bit i selects
// eigenline i.
class SplitTables {
 public:
  SplitTables(const FilteredIsocrystal& fi, long bound = 12);

  long lines() const { return n_; }
  std::uint32_t full_mask() const { return (n_ >= 32) ? 0 : ((1u << n_) - 1); }

  const Rat& deg_hodge(std::uint32_t mask) const { return deg_hodge_[mask]; }
  const Rat& deg_newton(std::uint32_t mask) const { return deg_newton_[mask]; }
  // deg(F_H|W) <= deg(F_N|W) for W = mask and every subset of it
  bool hodge_below_newton_hereditary(std::uint32_t mask) const {
    return all_le_[mask] != 0;
  }
  // (span(mask), phi, F_H) weakly admissible as a subobject
  bool wa(std::uint32_t mask) const {
    return deg_hodge_[mask] == deg_newton_[mask] && all_le_[mask] != 0;
  }
  Subspace span_of(std::uint32_t mask) const;

 private:
  long n_;
  Mat eigrows_;
  std::vector<Rat> deg_hodge_, deg_newton_;
  std::vector<char> all_le_;
};

// Lemma-style verdict with an exact witness.  Split model: full enumeration
// over eigen-spans.  Scalar Frobenius (phi = c*I): every subspace is stable,
// and the verdict reduces to a dominance test on the Hodge type, decided
// exactly; the violating step is returned as witness.
WaVerdict is_weakly_admissible(const FilteredIsocrystal& fi);

// The two-step stable filtration Xi_{W,a,b}: full space up to weight a,
// W up to weight b, zero beyond.
Filtration xi_from(const Subspace& w, const Rat& a, const Rat& b);

struct ScalarPair {
  Rat hodge_side;   // <F_H, Xi>
  Rat newton_side;  // <F_N, Xi>
};

// Evaluates both sides of the scalar-product admissibility condition for a
// stable test filtration.  require_stable verifies phi-stability of every
// step first.
ScalarPair check_scalar_inequalities(const FilteredIsocrystal& fi,
                                     const Filtration& xi, bool require_stable);

// Sub-object on an invariant subspace (an eigen-span in the split model),
// with transported split data.
FilteredIsocrystal sub_object(const FilteredIsocrystal& fi, const Subspace& w);

// Quotient object on the complement-coordinate model, plus the matrix whose
// rows express the model basis in the original coordinates.
struct QuotientObject {
  FilteredIsocrystal obj;
  Mat lift;
};
QuotientObject quotient_object(const FilteredIsocrystal& fi, const Subspace& w);

struct HnPiece {
  Rat slope;        // slope of the graded piece, equals its weight in F_HN
  Subspace step;    // flag step in the original space
  bool semistable;  // re-derived on the piece by enumeration
};

struct HnResult {
  Filtration filtration;
  std::vector<HnPiece> pieces;  // in flag order, slopes strictly decreasing
};

// Harder-Narasimhan flag for the slope (deg F_H - deg F_N)/dim: repeatedly
// take the invariant subspace of maximal slope (then maximal dimension;
// uniqueness asserted) and pass to the quotient object.
HnResult hn_with_pieces(const FilteredIsocrystal& fi);
Filtration hn_filtration(const FilteredIsocrystal& fi);

struct HnIdentity {
  Rat hodge_term;   // <F_H, F_HN>
  Rat newton_term;  // <F_N, F_HN>
  Rat norm_term;    // <F_HN, F_HN>
  bool holds;       // hodge_term - newton_term == norm_term
};

HnIdentity verify_hn_identity(const FilteredIsocrystal& fi);

}  // namespace filiso
