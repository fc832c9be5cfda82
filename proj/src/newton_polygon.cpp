#include "filiso/newton_polygon.hpp"

namespace filiso {

NewtonPolygon newton_polygon(const std::vector<Rat>& coeffs, const Int& p) {
  require_prime(p);
  if (coeffs.empty() || coeffs.front() != 1)
    throw MathError("polynomial must be monic");
  if (coeffs.back() == 0) throw MathError("non-invertible Frobenius");

  const long n = static_cast<long>(coeffs.size()) - 1;
  std::vector<std::pair<long, Rat>> pts;
  for (long i = 0; i <= n; ++i) {
    if (coeffs[static_cast<size_t>(i)] == 0) continue;
    pts.emplace_back(i, Rat(vp(coeffs[static_cast<size_t>(i)], p)));
  }

  // Monotone-chain lower hull over strictly increasing indices.
  std::vector<std::pair<long, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b iff it lies strictly below segment a-pt
      Rat lhs = (b.second - a.second) * (pt.first - a.first);
      Rat rhs = (pt.second - a.second) * (b.first - a.first);
      if (lhs < rhs) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  NewtonPolygon np;
  np.vertices = hull;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    Rat slope = (hull[k + 1].second - hull[k].second) /
                Rat(hull[k + 1].first - hull[k].first);
    for (long m = hull[k].first; m < hull[k + 1].first; ++m)
      np.slopes.push_back(slope);
  }
  if (static_cast<long>(np.slopes.size()) != n)
    throw InternalError("newton polygon slope count mismatch");
  return np;
}

std::vector<Rat> newton_slopes(const std::vector<Rat>& coeffs, const Int& p) {
  return newton_polygon(coeffs, p).slopes;
}

}  // namespace filiso
