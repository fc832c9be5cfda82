#pragma once

#include <utility>
#include <vector>

#include "filiso/scalars.hpp"

namespace filiso {

// Lower convex hull of the points (i, vp(a_i)) where a_i is the coefficient
// of x^{n-i} in a monic polynomial of degree n.  With this convention the
// slope multiset equals the multiset of valuations of the roots, and the
// slopes sum (with multiplicity) to vp(constant term).
struct NewtonPolygon {
  std::vector<std::pair<long, Rat>> vertices;  // strictly increasing indices
  std::vector<Rat> slopes;                     // ascending, size = degree
};

// coeffs in descending degree, leading coefficient 1, nonzero constant term.
// Throws MathError("non-invertible Frobenius") on a zero constant term.
NewtonPolygon newton_polygon(const std::vector<Rat>& monic_coeffs, const Int& p);

// The slope multiset, ascending.
std::vector<Rat> newton_slopes(const std::vector<Rat>& monic_coeffs, const Int& p);

}  // namespace filiso
