#pragma once

#include <optional>
#include <vector>

#include "filiso/filtration.hpp"
#include "filiso/lattice.hpp"
#include "filiso/linalg.hpp"
#include "filiso/newton_polygon.hpp"
#include "filiso/scalars.hpp"

namespace filiso {

// Split model: distinct rational eigenvalues, eigenvectors as rows.  This is
// the regime in which the Frobenius-stable subspaces are exactly the 2^n
// spans of eigenvector subsets, so subspace quantifiers become finite.
struct SplitData {
  std::vector<Rat> eigvals;
  Mat eigbasis;  // row i is an eigenvector for eigvals[i]
};

// Isocrystal over F_p (so sigma = id and the Frobenius is an honest
// invertible rational matrix acting on column vectors).
class Isocrystal {
 public:
  Isocrystal(Int p, Mat phi, std::optional<SplitData> split = std::nullopt);

  const Int& p() const { return p_; }
  long dim() const { return phi_.rows(); }
  const Mat& phi() const { return phi_; }
  bool is_split() const { return split_.has_value(); }
  const SplitData& split() const;

  // c when phi = c * identity; such a Frobenius has every subspace stable,
  // which keeps weak admissibility decidable without split data.
  std::optional<Rat> scalar_value() const;

  // Valuations of the eigenvalues as exact rationals, one per eigenline
  // (split model only).
  std::vector<Rat> line_slopes() const;

 private:
  Int p_;
  Mat phi_;
  std::optional<SplitData> split_;
};

struct NewtonData {
  TypeVector slopes;  // nu, sorted decreasing
  std::optional<Graduation> grad;          // G_N (split only)
  std::optional<Filtration> fil;           // F_N
  std::optional<Filtration> fil_opposed;   // F_N^iota

  const Graduation& graduation() const;
  const Filtration& filtration() const;
  const Filtration& filtration_opposed() const;
};

// Slopes always (Newton polygon of the characteristic polynomial); the
// filtrations additionally need the split model.
NewtonData newton(const Isocrystal& iso);

// All Frobenius-stable subspaces in the split model: the 2^n eigen-spans,
// canonicalized, sorted by dimension then by eigenline subset.
std::vector<Subspace> invariant_subspaces(const Isocrystal& iso, long bound = 12);

// vp(det(phi|W)) for an invariant subspace W.
Rat deg_newton_on(const Isocrystal& iso, const Subspace& w);

struct TensorIso {
  Isocrystal iso;
  bool collision = false;  // eigenvalue products collided; split data dropped
};

TensorIso tensor_isocrystal(const Isocrystal& a, const Isocrystal& b);

}  // namespace filiso
