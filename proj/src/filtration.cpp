#include "filiso/filtration.hpp"

#include <algorithm>
#include <map>

namespace filiso {

TypeVector::TypeVector(std::vector<Rat> e) : entries(std::move(e)) {
  std::sort(entries.begin(), entries.end(), std::greater<Rat>());
}

Rat TypeVector::sum() const {
  Rat s(0);
  for (const Rat& x : entries) s += x;
  return s;
}

bool dominance_leq(const TypeVector& a, const TypeVector& b) {
  if (a.size() != b.size()) throw DimensionError("type length mismatch");
  Rat pa(0), pb(0);
  for (long i = 0; i < a.size(); ++i) {
    pa += a.entries[static_cast<size_t>(i)];
    pb += b.entries[static_cast<size_t>(i)];
    if (pa > pb) return false;
  }
  return pa == pb;
}

Filtration Filtration::trivial(long ambient, const Rat& weight) {
  if (ambient == 0) return Filtration(0, {});
  return Filtration(ambient, {{weight, Subspace::full(ambient)}});
}

Filtration Filtration::from_breakpoints(long ambient,
                                        std::vector<std::pair<Rat, Subspace>> bp) {
  if (ambient == 0) {
    if (!bp.empty()) throw DimensionError("breakpoints on empty space");
    return Filtration(0, {});
  }
  if (bp.empty()) throw DimensionError("a filtration needs at least one breakpoint");
  for (size_t i = 0; i < bp.size(); ++i) {
    if (bp[i].second.ambient() != ambient) throw DimensionError("ambient mismatch");
    if (i + 1 < bp.size()) {
      if (!(bp[i].first < bp[i + 1].first))
        throw MathError("weights not strictly increasing");
      if (!(bp[i].second.dim() > bp[i + 1].second.dim()) ||
          !bp[i].second.contains(bp[i + 1].second))
        throw MathError("steps not strictly decreasing");
    }
  }
  if (bp.front().second.dim() != ambient)
    throw MathError("first step must be the full space");
  if (bp.back().second.dim() == 0)
    throw MathError("zero step is implicit, not a breakpoint");
  return Filtration(ambient, std::move(bp));
}

Filtration Filtration::from_steps(long ambient,
                                  std::vector<std::pair<Rat, Subspace>> steps) {
  if (ambient == 0) return Filtration(0, {});
  // weight ascending; among samples at one weight the filtration value is
  // the largest supplied step
  std::sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.dim() > b.second.dim();
  });
  std::vector<std::pair<Rat, Subspace>> bp;
  for (auto& s : steps) {
    if (!bp.empty() && bp.back().first == s.first) continue;
    if (s.second.dim() == 0) continue;
    if (!bp.empty() && bp.back().second == s.second) {
      bp.back().first = s.first;  // merge equal steps onto the largest weight
      continue;
    }
    bp.push_back(std::move(s));
  }
  return from_breakpoints(ambient, std::move(bp));
}

Subspace Filtration::step_at(const Rat& gamma) const {
  for (const auto& [w, s] : bp_)
    if (w >= gamma) return s;
  return Subspace::zero(ambient_);
}

std::vector<std::pair<Rat, long>> Filtration::graded_dims() const {
  std::vector<std::pair<Rat, long>> out;
  for (size_t i = 0; i < bp_.size(); ++i) {
    long next = (i + 1 < bp_.size()) ? bp_[i + 1].second.dim() : 0;
    out.emplace_back(bp_[i].first, bp_[i].second.dim() - next);
  }
  return out;
}

Rat Filtration::degree() const {
  Rat d(0);
  for (const auto& [w, m] : graded_dims()) d += w * Rat(m);
  return d;
}

TypeVector Filtration::type() const {
  std::vector<Rat> entries;
  for (const auto& [w, m] : graded_dims())
    for (long k = 0; k < m; ++k) entries.push_back(w);
  return TypeVector(std::move(entries));
}

Filtration Filtration::scale_weights(const Rat& c) const {
  if (c < 0) throw MathError("negative weight scaling");
  std::vector<std::pair<Rat, Subspace>> steps;
  for (const auto& [w, s] : bp_) steps.emplace_back(w * c, s);
  return from_steps(ambient_, std::move(steps));
}

Filtration Filtration::shift_weights(const Rat& c) const {
  std::vector<std::pair<Rat, Subspace>> steps;
  for (const auto& [w, s] : bp_) steps.emplace_back(w + c, s);
  return from_steps(ambient_, std::move(steps));
}

Graduation Graduation::from_pieces(long ambient,
                                   std::vector<std::pair<Rat, Subspace>> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  long total = 0;
  Subspace acc = Subspace::zero(ambient);
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].second.ambient() != ambient) throw DimensionError("ambient mismatch");
    if (pieces[i].second.dim() == 0) throw MathError("graduation piece is zero");
    if (i + 1 < pieces.size() && !(pieces[i].first < pieces[i + 1].first))
      throw MathError("piece weights not strictly increasing");
    total += pieces[i].second.dim();
    acc = sum_subspaces(acc, pieces[i].second);
  }
  if (total != ambient || acc.dim() != ambient)
    throw MathError("pieces are not a direct sum decomposition");
  return Graduation(ambient, std::move(pieces));
}

Rat Graduation::degree() const {
  Rat d(0);
  for (const auto& [w, s] : pieces_) d += w * Rat(s.dim());
  return d;
}

Filtration fil_of_grad(const Graduation& g) {
  const long n = g.ambient();
  if (n == 0) return Filtration::trivial(0);
  std::vector<std::pair<Rat, Subspace>> steps;
  Subspace acc = Subspace::zero(n);
  // suffix sums: F^w = sum of pieces of weight >= w
  for (auto it = g.pieces().rbegin(); it != g.pieces().rend(); ++it) {
    acc = sum_subspaces(acc, it->second);
    steps.emplace_back(it->first, acc);
  }
  return Filtration::from_steps(n, std::move(steps));
}

Graduation iota(const Graduation& g) {
  std::vector<std::pair<Rat, Subspace>> pieces;
  for (const auto& [w, s] : g.pieces()) pieces.emplace_back(-w, s);
  return Graduation::from_pieces(g.ambient(), std::move(pieces));
}

Filtration restrict_filtration(const Filtration& f, const Subspace& w) {
  if (w.ambient() != f.ambient()) throw DimensionError("ambient mismatch");
  std::vector<std::pair<Rat, Subspace>> steps;
  for (const auto& [wt, s] : f.breakpoints()) {
    Subspace cap = intersect(s, w);
    steps.emplace_back(wt, w.coordinates_of(cap));
  }
  return Filtration::from_steps(w.dim(), std::move(steps));
}

Filtration quotient_filtration(const Filtration& f, const Subspace& w) {
  if (w.ambient() != f.ambient()) throw DimensionError("ambient mismatch");
  QuotientModel q(w);
  std::vector<std::pair<Rat, Subspace>> steps;
  for (const auto& [wt, s] : f.breakpoints())
    steps.emplace_back(wt, q.project_subspace(s));
  return Filtration::from_steps(q.dim(), std::move(steps));
}

namespace {

long dim_intersection(const Subspace& a, const Subspace& b) {
  // dim(A) + dim(B) - dim(A+B), computed by one rank
  if (a.dim() == 0 || b.dim() == 0) return 0;
  long sum_rank = a.basis().vstack(b.basis()).rank();
  return a.dim() + b.dim() - sum_rank;
}

}  // namespace

Rat scalar_product(const Filtration& a, const Filtration& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
  const auto& ba = a.breakpoints();
  const auto& bb = b.breakpoints();
  const size_t ra = ba.size(), rb = bb.size();
  if (ra == 0 || rb == 0) return Rat(0);
  // D[i][j] = dim(A_i cap B_j), with the zero step appended as a sentinel;
  // the multiplicity of (w_i, w_j) in the double graded piece is the
  // inclusion-exclusion D[i][j] - D[i+1][j] - D[i][j+1] + D[i+1][j+1].
  std::vector<std::vector<long>> D(ra + 1, std::vector<long>(rb + 1, 0));
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < rb; ++j) {
      if (i == 0)
        D[i][j] = bb[j].second.dim();
      else if (j == 0)
        D[i][j] = ba[i].second.dim();
      else
        D[i][j] = dim_intersection(ba[i].second, bb[j].second);
    }
  Rat total(0);
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < rb; ++j) {
      long m = D[i][j] - D[i + 1][j] - D[i][j + 1] + D[i + 1][j + 1];
      if (m != 0) total += ba[i].first * bb[j].first * Rat(m);
    }
  return total;
}

Rat scalar_product_via_graded(const Filtration& a, const Filtration& b) {
  if (a.ambient() != b.ambient()) throw DimensionError("ambient mismatch");
  Rat total(0);
  const auto& ba = a.breakpoints();
  for (size_t i = 0; i < ba.size(); ++i) {
    const Subspace& top = ba[i].second;
    Filtration on_step = restrict_filtration(b, top);
    Subspace next_in_coords =
        (i + 1 < ba.size()) ? top.coordinates_of(ba[i + 1].second)
                            : Subspace::zero(top.dim());
    Filtration on_graded = quotient_filtration(on_step, next_in_coords);
    total += ba[i].first * on_graded.degree();
  }
  return total;
}

Rat norm_sq(const Filtration& a) {
  Rat t(0);
  for (const auto& [w, m] : a.graded_dims()) t += w * w * Rat(m);
  return t;
}

Rat dist_sq(const Filtration& a, const Filtration& b) {
  return norm_sq(a) + norm_sq(b) - Rat(2) * scalar_product(a, b);
}

Filtration tensor_filtration(const Filtration& a, const Filtration& b) {
  const long n = a.ambient() * b.ambient();
  if (n == 0) return Filtration::trivial(0);
  const auto& ba = a.breakpoints();
  const auto& bb = b.breakpoints();
  // group index pairs by weight sum, then accumulate spans downward
  std::map<Rat, std::vector<std::pair<size_t, size_t>>, std::greater<Rat>> by_sum;
  for (size_t i = 0; i < ba.size(); ++i)
    for (size_t j = 0; j < bb.size(); ++j)
      by_sum[ba[i].first + bb[j].first].emplace_back(i, j);
  std::vector<std::pair<Rat, Subspace>> steps;
  Subspace acc = Subspace::zero(n);
  for (const auto& [sum, pairs] : by_sum) {
    for (const auto& [i, j] : pairs)
      acc = sum_subspaces(acc, tensor_subspace(ba[i].second, bb[j].second));
    steps.emplace_back(sum, acc);
  }
  return Filtration::from_steps(n, std::move(steps));
}

TypeVector type_of(const Filtration& f) { return f.type(); }

}  // namespace filiso
