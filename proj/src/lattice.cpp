#include "filiso/lattice.hpp"

#include <algorithm>

namespace filiso {

namespace {

bool p_integral(const Rat& x, const Int& p) {
  return x == 0 || vp(x, p) >= 0;
}

bool p_integral_matrix(const Mat& m, const Int& p) {
  for (long i = 0; i < m.rows(); ++i)
    for (long j = 0; j < m.cols(); ++j)
      if (!p_integral(m.at(i, j), p)) return false;
  return true;
}

}  // namespace

SmithResult plocal_smith(const Mat& m, const Int& p) {
  require_prime(p);
  Mat a = m;
  const long rows = a.rows(), cols = a.cols();
  Mat vinv = Mat::identity(cols);
  SmithResult res;
  res.col_inv = Mat::identity(cols);

  long k = 0;
  while (k < rows && k < cols) {
    // pivot of minimal vp among remaining entries, ties by row then column
    long bi = -1, bj = -1;
    long bestv = 0;
    for (long i = k; i < rows; ++i)
      for (long j = k; j < cols; ++j) {
        if (a.at(i, j) == 0) continue;
        long v = vp(a.at(i, j), p);
        if (bi < 0 || v < bestv) {
          bi = i; bj = j; bestv = v;
        }
      }
    if (bi < 0) break;
    if (bi != k)
      for (long j = 0; j < cols; ++j) std::swap(a.at(bi, j), a.at(k, j));
    if (bj != k) {
      for (long i = 0; i < rows; ++i) std::swap(a.at(i, bj), a.at(i, k));
      // column swap E: col_inv <- E^{-1} col_inv = row swap
      for (long j = 0; j < cols; ++j) std::swap(vinv.at(bj, j), vinv.at(k, j));
    }
    // normalize the pivot to a pure p-power: divide the column by the unit
    Rat unit = a.at(k, k) / p_power(p, bestv);
    for (long i = 0; i < rows; ++i) a.at(i, k) /= unit;
    for (long j = 0; j < cols; ++j) vinv.at(k, j) *= unit;
    // clear the row and column; multipliers are p-integral by pivot choice
    for (long i = k + 1; i < rows; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) / a.at(k, k);
      for (long j = k; j < cols; ++j) a.at(i, j) -= f * a.at(k, j);
    }
    for (long j = k + 1; j < cols; ++j) {
      if (a.at(k, j) == 0) continue;
      Rat f = a.at(k, j) / a.at(k, k);
      for (long i = k; i < rows; ++i) a.at(i, j) -= f * a.at(i, k);
      // column op M <- M E with E = I + (-f) e_{k,j}; col_inv <- E^{-1} col_inv
      for (long c = 0; c < cols; ++c) vinv.at(k, c) += f * vinv.at(j, c);
    }
    res.exponents.push_back(bestv);
    ++k;
  }
  res.rank = k;
  res.col_inv = vinv;
  return res;
}

Lattice::Lattice(Mat basis, Int p) : basis_(std::move(basis)), p_(std::move(p)) {
  require_prime(p_);
  if (basis_.rows() != basis_.cols()) throw DimensionError("lattice basis not square");
  if (basis_.rows() > 0 && basis_.det() == 0) throw MathError("singular lattice basis");
}

Lattice Lattice::standard(long n, const Int& p) {
  return Lattice(Mat::identity(n), p);
}

bool Lattice::operator==(const Lattice& o) const {
  if (p_ != o.p_) throw MathError("prime mismatch");
  if (ambient() != o.ambient()) throw DimensionError("ambient mismatch");
  Mat c = basis_ * o.basis_.inverse();
  if (!p_integral_matrix(c, p_)) return false;
  return p_integral_matrix(c.inverse(), p_);
}

bool Lattice::subset_of(const Lattice& o) const {
  if (p_ != o.p_) throw MathError("prime mismatch");
  return p_integral_matrix(basis_ * o.basis_.inverse(), p_);
}

Lattice Lattice::scaled_by_p_power(long e) const {
  return Lattice(basis_.scaled(p_power(p_, e)), p_);
}

Lattice Lattice::apply(const Mat& op) const {
  return Lattice(basis_ * op.transpose(), p_);
}

Mat Lattice::intersection_basis(const Subspace& w) const {
  if (w.ambient() != ambient()) throw DimensionError("ambient mismatch");
  if (w.dim() == 0) return Mat(0, ambient());
  // express w in lattice coordinates, saturate there, map back
  Mat coords = w.basis() * basis_.inverse();
  SmithResult s = plocal_smith(coords, p_);
  if (s.rank != w.dim()) throw InternalError("saturation rank mismatch");
  Mat sat(w.dim(), ambient());
  for (long i = 0; i < w.dim(); ++i)
    for (long j = 0; j < ambient(); ++j) sat.at(i, j) = s.col_inv.at(i, j);
  return sat * basis_;
}

Lattice Lattice::tensor(const Lattice& a, const Lattice& b) {
  if (a.p_ != b.p_) throw MathError("prime mismatch");
  return Lattice(Mat::kronecker(a.basis_, b.basis_), a.p_);
}

Lattice lattice_from_generators(const Mat& gens, const Int& p) {
  const long n = gens.cols();
  SmithResult s = plocal_smith(gens, p);
  if (s.rank != n) throw MathError("generators do not span");
  Mat b(n, n);
  for (long i = 0; i < n; ++i) {
    Rat scale = p_power(p, s.exponents[static_cast<size_t>(i)]);
    for (long j = 0; j < n; ++j) b.at(i, j) = scale * s.col_inv.at(i, j);
  }
  return Lattice(std::move(b), p);
}

std::vector<long> relative_position(const Lattice& a, const Lattice& b) {
  if (a.prime() != b.prime()) throw MathError("prime mismatch");
  if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
  Mat c = a.basis() * b.basis().inverse();
  SmithResult s = plocal_smith(c, a.prime());
  if (s.rank != a.ambient()) throw InternalError("transition matrix not invertible");
  std::vector<long> mu = s.exponents;
  std::sort(mu.begin(), mu.end(), std::greater<long>());
  return mu;
}

}  // namespace filiso
