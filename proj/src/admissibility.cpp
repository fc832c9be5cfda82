#include "filiso/admissibility.hpp"

#include <algorithm>
#include <bit>

namespace filiso {

FilteredIsocrystal::FilteredIsocrystal(Isocrystal iso, Filtration hodge)
    : iso_(std::move(iso)), hodge_(std::move(hodge)) {
  if (iso_.dim() != hodge_.ambient())
    throw DimensionError("hodge filtration ambient mismatch");
}

namespace {

// rank of every column subset of m, by depth-first search over columns with
// an incremental echelon state
void rank_dfs(const Mat& m, long col, std::uint32_t mask,
              std::vector<std::vector<Rat>>& pivots, std::vector<long>& pivrows,
              std::vector<long>& out) {
  if (col == m.cols()) {
    out[mask] = static_cast<long>(pivots.size());
    return;
  }
  rank_dfs(m, col + 1, mask, pivots, pivrows, out);

  std::vector<Rat> v(static_cast<size_t>(m.rows()));
  for (long r = 0; r < m.rows(); ++r) v[static_cast<size_t>(r)] = m.at(r, col);
  for (size_t k = 0; k < pivots.size(); ++k) {
    Rat f = v[static_cast<size_t>(pivrows[k])];
    if (f == 0) continue;
    for (long r = 0; r < m.rows(); ++r) v[static_cast<size_t>(r)] -= f * pivots[k][static_cast<size_t>(r)];
  }
  long pr = -1;
  for (long r = 0; r < m.rows(); ++r)
    if (v[static_cast<size_t>(r)] != 0) { pr = r; break; }
  if (pr < 0) {
    rank_dfs(m, col + 1, mask | (1u << col), pivots, pivrows, out);
    return;
  }
  Rat inv = 1 / v[static_cast<size_t>(pr)];
  for (long r = 0; r < m.rows(); ++r) v[static_cast<size_t>(r)] *= inv;
  pivots.push_back(std::move(v));
  pivrows.push_back(pr);
  rank_dfs(m, col + 1, mask | (1u << col), pivots, pivrows, out);
  pivots.pop_back();
  pivrows.pop_back();
}

std::vector<long> column_subset_ranks(const Mat& m) {
  std::vector<long> out(static_cast<size_t>(1) << m.cols(), 0);
  std::vector<std::vector<Rat>> pivots;
  std::vector<long> pivrows;
  rank_dfs(m, 0, 0, pivots, pivrows, out);
  return out;
}

}  // namespace

SplitTables::SplitTables(const FilteredIsocrystal& fi, long bound) {
  const Isocrystal& iso = fi.iso();
  const SplitData& sd = iso.split();
  n_ = iso.dim();
  if (n_ > bound || n_ > 30) throw ModelError("enumeration bound exceeded");
  eigrows_ = sd.eigbasis;
  const std::uint32_t count = 1u << n_;

  std::vector<Rat> slopes = iso.line_slopes();
  deg_newton_.assign(count, Rat(0));
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    std::uint32_t low = mask & (mask - 1);
    long bit = std::countr_zero(mask);
    deg_newton_[mask] = deg_newton_[low] + slopes[static_cast<size_t>(bit)];
  }

  // Hodge degrees: express each step in eigen coordinates; then
  // dim(step cap span(mask)) = dim(step) - rank(columns outside mask),
  // and the degree is the telescoped weighted sum of those dims.
  Mat to_eig = eigrows_.inverse();
  deg_hodge_.assign(count, Rat(0));
  const auto& bp = fi.hodge().breakpoints();
  {
    const Rat& w1 = bp.front().first;
    for (std::uint32_t mask = 0; mask < count; ++mask)
      deg_hodge_[mask] = w1 * Rat(std::popcount(mask));
  }
  for (size_t i = 1; i < bp.size(); ++i) {
    Rat dw = bp[i].first - bp[i - 1].first;
    Mat coords = bp[i].second.basis() * to_eig;
    std::vector<long> ranks = column_subset_ranks(coords);
    long t = bp[i].second.dim();
    std::uint32_t full = count - 1;
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      long d = t - ranks[full & ~mask];
      if (d != 0) deg_hodge_[mask] += dw * Rat(d);
    }
  }

  all_le_.assign(count, 0);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    bool ok = deg_hodge_[mask] <= deg_newton_[mask];
    if (ok)
      for (std::uint32_t m = mask; m; m &= (m - 1)) {
        std::uint32_t sub = mask & ~(m & (-m));
        if (!all_le_[sub]) { ok = false; break; }
      }
    all_le_[mask] = ok ? 1 : 0;
  }
}

Subspace SplitTables::span_of(std::uint32_t mask) const {
  std::vector<std::vector<Rat>> rows;
  for (long i = 0; i < n_; ++i)
    if (mask & (1u << i)) rows.push_back(eigrows_.row(i));
  return Subspace::span_rows(n_, rows);
}

namespace {

WaVerdict wa_scalar_case(const FilteredIsocrystal& fi, const Rat& c) {
  // phi = c*I: every subspace is stable; deg(F_H|W) maximizes on the steps
  // of F_H, so weak admissibility is the dominance test against the
  // constant type vp(c).
  WaVerdict v;
  Rat lambda(vp(c, fi.iso().p()));
  Rat deg_h = fi.hodge().degree();
  Rat deg_n = lambda * Rat(fi.dim());
  if (deg_h != deg_n) {
    v.admissible = false;
    v.degree_mismatch = std::make_pair(deg_h, deg_n);
    return v;
  }
  const auto& bp = fi.hodge().breakpoints();
  for (size_t j = bp.size(); j-- > 1;) {
    Rat d(0);
    for (size_t i = j; i < bp.size(); ++i) {
      long next = (i + 1 < bp.size()) ? bp[i + 1].second.dim() : 0;
      d += bp[i].first * Rat(bp[i].second.dim() - next);
    }
    if (d > lambda * Rat(bp[j].second.dim())) {
      v.admissible = false;
      v.witness = bp[j].second;
      return v;
    }
  }
  v.admissible = true;
  return v;
}

}  // namespace

WaVerdict is_weakly_admissible(const FilteredIsocrystal& fi) {
  if (!fi.iso().is_split()) {
    if (auto c = fi.iso().scalar_value()) return wa_scalar_case(fi, *c);
    throw ModelError("weak admissibility requires split model");
  }
  SplitTables t(fi);
  WaVerdict v;
  std::uint32_t full = t.full_mask();
  if (t.deg_hodge(full) != t.deg_newton(full)) {
    v.admissible = false;
    v.degree_mismatch = std::make_pair(t.deg_hodge(full), t.deg_newton(full));
    return v;
  }
  for (std::uint32_t mask = 1; mask < full; ++mask)
    if (t.deg_hodge(mask) > t.deg_newton(mask)) {
      v.admissible = false;
      v.witness = t.span_of(mask);
      return v;
    }
  v.admissible = true;
  return v;
}

Filtration xi_from(const Subspace& w, const Rat& a, const Rat& b) {
  if (a > b) throw MathError("xi requires a <= b");
  const long n = w.ambient();
  std::vector<std::pair<Rat, Subspace>> steps;
  steps.emplace_back(a, Subspace::full(n));
  steps.emplace_back(b, w);
  return Filtration::from_steps(n, std::move(steps));
}

ScalarPair check_scalar_inequalities(const FilteredIsocrystal& fi,
                                     const Filtration& xi, bool require_stable) {
  if (xi.ambient() != fi.dim()) throw DimensionError("ambient mismatch");
  if (require_stable)
    for (const auto& [w, s] : xi.breakpoints())
      if (!is_invariant(fi.iso().phi(), s)) throw MathError("subspace not stable");
  NewtonData nd = newton(fi.iso());
  return {scalar_product(fi.hodge(), xi), scalar_product(nd.filtration(), xi)};
}

FilteredIsocrystal sub_object(const FilteredIsocrystal& fi, const Subspace& w) {
  const Isocrystal& iso = fi.iso();
  const SplitData& sd = iso.split();
  Mat phi_w = restrict_operator(iso.phi(), w);
  std::vector<Rat> vals;
  std::vector<std::vector<Rat>> rows;
  for (long i = 0; i < iso.dim(); ++i) {
    std::vector<Rat> v = sd.eigbasis.row(i);
    if (!w.contains(v)) continue;
    vals.push_back(sd.eigvals[static_cast<size_t>(i)]);
    rows.push_back(w.coordinates(v));
  }
  if (static_cast<long>(vals.size()) != w.dim())
    throw MathError("subspace not stable");
  SplitData sub{std::move(vals), Mat::from_rows(rows)};
  return FilteredIsocrystal(Isocrystal(iso.p(), std::move(phi_w), std::move(sub)),
                            restrict_filtration(fi.hodge(), w));
}

QuotientObject quotient_object(const FilteredIsocrystal& fi, const Subspace& w) {
  const Isocrystal& iso = fi.iso();
  const SplitData& sd = iso.split();
  QuotientModel qm(w);
  Mat phi_q = qm.push_operator(iso.phi());
  std::vector<Rat> vals;
  std::vector<std::vector<Rat>> rows;
  for (long i = 0; i < iso.dim(); ++i) {
    std::vector<Rat> v = sd.eigbasis.row(i);
    if (w.contains(v)) continue;
    vals.push_back(sd.eigvals[static_cast<size_t>(i)]);
    rows.push_back(qm.project(v));
  }
  if (static_cast<long>(vals.size()) != qm.dim())
    throw MathError("subspace not stable");
  SplitData split_q{std::move(vals), Mat::from_rows(rows)};
  FilteredIsocrystal obj(Isocrystal(iso.p(), std::move(phi_q), std::move(split_q)),
                         quotient_filtration(fi.hodge(), w));
  return {std::move(obj), qm.section_rows_matrix()};
}

namespace {

// shared skeleton of the two Harder-Narasimhan style recursions
struct StagePick {
  std::uint32_t mask;
  Rat slope;
};

template <typename SlopeFn, typename CandidateFn>
StagePick pick_destabilizing(const SplitTables& t, SlopeFn slope_of,
                             CandidateFn is_candidate) {
  std::uint32_t best_mask = 0;
  Rat best_slope;
  int best_pop = -1;
  long ties = 0;
  for (std::uint32_t mask = 1; mask <= t.full_mask(); ++mask) {
    if (!is_candidate(mask)) continue;
    Rat s = slope_of(mask);
    int pop = std::popcount(mask);
    if (best_pop < 0 || s > best_slope || (s == best_slope && pop > best_pop)) {
      best_mask = mask;
      best_slope = s;
      best_pop = pop;
      ties = 1;
    } else if (s == best_slope && pop == best_pop) {
      ++ties;
    }
  }
  if (best_pop < 0) throw InternalError("no destabilizing candidate");
  if (ties != 1) throw InternalError("destabilizing subobject not unique");
  return {best_mask, best_slope};
}

}  // namespace

HnResult hn_with_pieces(const FilteredIsocrystal& fi) {
  const long n = fi.dim();
  HnResult res;
  FilteredIsocrystal cur = fi;
  Mat lift = Mat::identity(n);
  Subspace prev = Subspace::zero(n);
  while (true) {
    SplitTables t(cur);
    auto slope_of = [&](std::uint32_t m) -> Rat {
      return (t.deg_hodge(m) - t.deg_newton(m)) / Rat(std::popcount(m));
    };
    StagePick pick = pick_destabilizing(t, slope_of,
                                        [](std::uint32_t) { return true; });
    Subspace chosen = t.span_of(pick.mask);

    // lift the flag step back to the original coordinates
    Subspace step_orig =
        Subspace::span(n, (chosen.basis() * lift).vstack(prev.basis()));

    // the graded piece is the chosen subobject itself; re-check that it has
    // no invariant subspace of strictly larger slope
    FilteredIsocrystal piece = sub_object(cur, chosen);
    bool semistable = true;
    {
      SplitTables pt(piece);
      for (std::uint32_t m = 1; m <= pt.full_mask(); ++m)
        if ((pt.deg_hodge(m) - pt.deg_newton(m)) / Rat(std::popcount(m)) > pick.slope) {
          semistable = false;
          break;
        }
    }
    res.pieces.push_back({pick.slope, step_orig, semistable});

    if (pick.mask == t.full_mask()) break;
    QuotientObject q = quotient_object(cur, chosen);
    lift = q.lift * lift;
    prev = step_orig;
    cur = std::move(q.obj);
  }
  for (size_t i = 0; i + 1 < res.pieces.size(); ++i)
    if (!(res.pieces[i].slope > res.pieces[i + 1].slope))
      throw InternalError("HN slopes not strictly decreasing");
  std::vector<std::pair<Rat, Subspace>> steps;
  for (const auto& p : res.pieces) steps.emplace_back(p.slope, p.step);
  res.filtration = Filtration::from_steps(n, std::move(steps));
  return res;
}

Filtration hn_filtration(const FilteredIsocrystal& fi) {
  return hn_with_pieces(fi).filtration;
}

HnIdentity verify_hn_identity(const FilteredIsocrystal& fi) {
  Filtration hn = hn_filtration(fi);
  NewtonData nd = newton(fi.iso());
  HnIdentity out{scalar_product(fi.hodge(), hn),
                 scalar_product(nd.filtration(), hn), norm_sq(hn), false};
  out.holds = (out.hodge_term - out.newton_term == out.norm_term);
  return out;
}

}  // namespace filiso
