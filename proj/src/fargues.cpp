#include "filiso/fargues.hpp"

#include <bit>

namespace filiso {

bool is_wa_subobject(const FilteredIsocrystal& fi, const Subspace& w) {
  if (w.ambient() != fi.dim()) throw DimensionError("ambient mismatch");
  if (w.dim() == 0) return true;
  if (!is_invariant(fi.iso().phi(), w)) return false;
  return is_weakly_admissible(sub_object(fi, w)).admissible;
}

Rat fargues_degree(const FilteredIsocrystal& fi, const Subspace& w) {
  if (!is_wa_subobject(fi, w)) throw MathError("not a wa subobject");
  Rat d = -restrict_filtration(fi.hodge(), w).degree();
  if (d != -deg_newton_on(fi.iso(), w))
    throw InternalError("fargues degree disagrees with -vp(det phi|W)");
  if (w.dim() > 0) {
    NewtonData nd = newton(fi.iso());
    if (d != restrict_filtration(nd.filtration_opposed(), w).degree())
      throw InternalError("fargues degree disagrees with deg(F_N^iota|W)");
  }
  return d;
}

FarguesResult fargues_filtration(const FilteredIsocrystal& fi) {
  WaVerdict v = is_weakly_admissible(fi);
  if (!v.admissible) throw MathError("not weakly admissible");
  const long n = fi.dim();

  FarguesResult res;
  FilteredIsocrystal cur = fi;
  Mat lift = Mat::identity(n);
  Subspace prev = Subspace::zero(n);
  while (true) {
    SplitTables t(cur);
    if (!t.wa(t.full_mask()))
      throw InternalError("quotient of wa object lost admissibility");
    auto slope_of = [&](std::uint32_t m) -> Rat {
      return -t.deg_hodge(m) / Rat(std::popcount(m));
    };
    std::uint32_t best = 0;
    Rat best_slope;
    int best_pop = -1;
    long ties = 0;
    for (std::uint32_t m = 1; m <= t.full_mask(); ++m) {
      if (!t.wa(m)) continue;
      Rat s = slope_of(m);
      int pop = std::popcount(m);
      if (best_pop < 0 || s > best_slope || (s == best_slope && pop > best_pop)) {
        best = m;
        best_slope = s;
        best_pop = pop;
        ties = 1;
      } else if (s == best_slope && pop == best_pop) {
        ++ties;
      }
    }
    if (best_pop < 0) throw InternalError("no wa subobject candidate");
    if (ties != 1) throw InternalError("destabilizing wa subobject not unique");

    Subspace chosen = t.span_of(best);
    Subspace step_orig =
        Subspace::span(n, (chosen.basis() * lift).vstack(prev.basis()));

    FilteredIsocrystal piece = sub_object(cur, chosen);
    bool semistable = true;
    {
      SplitTables pt(piece);
      for (std::uint32_t m = 1; m <= pt.full_mask(); ++m)
        if (pt.wa(m) && -pt.deg_hodge(m) / Rat(std::popcount(m)) > best_slope) {
          semistable = false;
          break;
        }
    }
    res.pieces.push_back({best_slope, step_orig, semistable});

    if (best == t.full_mask()) break;
    QuotientObject q = quotient_object(cur, chosen);
    lift = q.lift * lift;
    prev = step_orig;
    cur = std::move(q.obj);
  }
  for (size_t i = 0; i + 1 < res.pieces.size(); ++i)
    if (!(res.pieces[i].weight > res.pieces[i + 1].weight))
      throw InternalError("Fargues slopes not strictly decreasing");
  std::vector<std::pair<Rat, Subspace>> steps;
  for (const auto& p : res.pieces) steps.emplace_back(p.weight, p.step);
  res.filtration = Filtration::from_steps(n, std::move(steps));
  return res;
}

bool check_projection_optimality(const FilteredIsocrystal& fi,
                                 const FarguesResult& result,
                                 const std::vector<Filtration>& samples) {
  NewtonData nd = newton(fi.iso());
  const Filtration& opposed = nd.filtration_opposed();
  Rat best = dist_sq(opposed, result.filtration);
  for (const Filtration& xi : samples) {
    bool stepwise = true;
    for (const auto& [w, s] : xi.breakpoints()) {
      if (!is_invariant(fi.iso().phi(), s)) throw MathError("subspace not stable");
      if (!is_wa_subobject(fi, s)) { stepwise = false; break; }
    }
    ScalarPair sp = check_scalar_inequalities(fi, xi, false);
    bool scalar_eq = (sp.hodge_side == sp.newton_side);
    if (stepwise != scalar_eq)
      throw InternalError("membership characterization mismatch");
    if (!stepwise) continue;
    if (best > dist_sq(opposed, xi)) return false;
  }
  return true;
}

bool check_perturbation_inequality(const FilteredIsocrystal& fi,
                                   const FarguesResult& result, const Rat& eps) {
  if (eps <= 0) throw MathError("epsilon must be positive");
  const auto& pieces = result.pieces;
  for (size_t i = 0; i + 1 < pieces.size(); ++i) {
    Rat gap = pieces[i].weight - pieces[i + 1].weight;
    if (!(eps < gap / Rat(2))) throw MathError("epsilon exceeds weight gap");
  }
  NewtonData nd = newton(fi.iso());
  const Filtration& opposed = nd.filtration_opposed();

  FilteredIsocrystal cur = fi;
  Filtration opp_cur = opposed;
  for (size_t i = 0; i < pieces.size(); ++i) {
    // piece object and F_N^iota transported to the current quotient level;
    // the pick recomputes what fargues_filtration chose at this stage
    SplitTables t(cur);
    std::uint32_t piece_mask = 0;
    Rat best_slope;
    int best_pop = -1;
    std::uint32_t best = 0;
    for (std::uint32_t m = 1; m <= t.full_mask(); ++m) {
      if (!t.wa(m)) continue;
      Rat s = -t.deg_hodge(m) / Rat(std::popcount(m));
      int pop = std::popcount(m);
      if (best_pop < 0 || s > best_slope || (s == best_slope && pop > best_pop)) {
        best = m;
        best_slope = s;
        best_pop = pop;
      }
    }
    piece_mask = best;
    if (best_slope != pieces[i].weight)
      throw InternalError("piece slope mismatch in perturbation check");
    Subspace chosen = t.span_of(piece_mask);

    FilteredIsocrystal piece = sub_object(cur, chosen);
    Filtration opp_piece = restrict_filtration(opp_cur, chosen);
    const Rat& delta = pieces[i].weight;

    SplitTables pt(piece);
    for (std::uint32_t m = 1; m <= pt.full_mask(); ++m) {
      if (!pt.wa(m)) continue;
      Rat dim_w(std::popcount(m));
      Rat deg_opp = restrict_filtration(opp_piece, pt.span_of(m)).degree();
      Rat value = eps * eps * dim_w + Rat(2) * eps * (delta * dim_w - deg_opp);
      if (value < 0) return false;
      if (m == pt.full_mask()) {
        // both signs of eps admissible on the full piece force the equality
        if (delta * dim_w != deg_opp) return false;
      }
    }

    if (piece_mask == t.full_mask()) break;
    QuotientObject q = quotient_object(cur, chosen);
    opp_cur = quotient_filtration(opp_cur, chosen);
    cur = std::move(q.obj);
  }
  return true;
}

TensorVerdict fargues_tensor_check(const FilteredIsocrystal& a,
                                   const FilteredIsocrystal& b) {
  TensorIso t = tensor_isocrystal(a.iso(), b.iso());
  if (t.collision) return TensorVerdict::skipped_collision;
  FilteredIsocrystal prod(t.iso, tensor_filtration(a.hodge(), b.hodge()));

  FarguesResult fa = fargues_filtration(a);
  FarguesResult fb = fargues_filtration(b);
  FarguesResult fprod = fargues_filtration(prod);
  Filtration expected = tensor_filtration(fa.filtration, fb.filtration);
  return fprod.filtration == expected ? TensorVerdict::equal
                                      : TensorVerdict::mismatch;
}

}  // namespace filiso
