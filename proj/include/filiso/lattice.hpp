#pragma once

#include <vector>

#include "filiso/linalg.hpp"
#include "filiso/scalars.hpp"

namespace filiso {

// Smith normal form over Z_(p) (integers localized at p): U*M*V = D with
// U, V invertible over Z_(p) and D diagonal with entries p^{e_i} (times
// units, normalized away).  col_inv holds V^{-1}, whose first `rank` rows
// span the saturation of the row span of M.
struct SmithResult {
  std::vector<long> exponents;  // diagonal exponents, in pivot order
  long rank = 0;
  Mat col_inv;                  // V^{-1}, square of size cols(M)
};

SmithResult plocal_smith(const Mat& m, const Int& p);

// A full-rank Z_(p)-lattice in Q^n, stored as an invertible row basis.
// Two bases describe the same lattice iff the change of basis matrix and
// its inverse are p-integral; equality tests exactly that.
class Lattice {
 public:
  Lattice(Mat basis, Int p);
  static Lattice standard(long n, const Int& p);

  long ambient() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const Int& prime() const { return p_; }

  bool operator==(const Lattice& o) const;
  bool subset_of(const Lattice& o) const;

  Lattice scaled_by_p_power(long e) const;

  // Image lattice under an invertible operator (column action).
  Lattice apply(const Mat& op) const;

  // Z_(p)-basis (rows, in ambient coordinates) of w intersected with the
  // lattice; exactly dim(w) rows.
  Mat intersection_basis(const Subspace& w) const;

  static Lattice tensor(const Lattice& a, const Lattice& b);

 private:
  Mat basis_;
  Int p_;
};

// Row span over Z_(p) of a (not necessarily square) generator matrix with
// full column rank.
Lattice lattice_from_generators(const Mat& gens, const Int& p);

// Dominant vector of p-exponents of the elementary divisors of the
// transition matrix from b's basis to a's basis; this is the vector-valued
// building distance, oriented so that relative_position(L, L + F) = t(F)
// for integral F and relative_position(phi L, L) is the Hodge type of phi.
std::vector<long> relative_position(const Lattice& a, const Lattice& b);

}  // namespace filiso
