#include "filiso/generate.hpp"

#include <algorithm>
#include <bit>

namespace filiso {

Int random_prime(Rng& rng) {
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  return Int(primes[rng.below(6)]);
}

namespace {

Mat random_invertible(Rng& rng, long n, long lo, long hi) {
  while (true) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m.at(i, j) = Rat(rng.range(lo, hi));
    if (m.det() != 0) return m;
  }
}

Mat random_p_unimodular(Rng& rng, long n, const Int& p) {
  while (true) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m.at(i, j) = Rat(rng.range(-4, 4));
    Rat d = m.det();
    if (d != 0 && vp(d, p) == 0) return m;
  }
}

}  // namespace

Isocrystal random_split_isocrystal(Rng& rng, long dim, const Int& p) {
  while (true) {
    std::vector<Rat> vals;
    for (long i = 0; i < dim; ++i) {
      long u;
      do {
        u = rng.range(-3, 3);
      } while (u == 0 || vp(Rat(u), p) != 0);
      long e = rng.range(-2, 2);
      vals.push_back(Rat(u) * p_power(p, e));
    }
    std::vector<Rat> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    bool distinct = true;
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1]) distinct = false;
    if (!distinct) continue;

    Mat eig = random_invertible(rng, dim, -3, 3);
    Mat d(dim, dim);
    for (long i = 0; i < dim; ++i) d.at(i, i) = vals[static_cast<size_t>(i)];
    Mat et = eig.transpose();
    Mat phi = et * d * et.inverse();
    return Isocrystal(p, std::move(phi), SplitData{std::move(vals), std::move(eig)});
  }
}

Lattice random_lattice(Rng& rng, long dim, const Int& p) {
  Mat u = random_p_unimodular(rng, dim, p);
  Mat b(dim, dim);
  for (long j = 0; j < dim; ++j) {
    Rat scale = p_power(p, rng.range(-3, 3));
    for (long i = 0; i < dim; ++i) b.at(i, j) = u.at(i, j) * scale;
  }
  return Lattice(std::move(b), p);
}

TypeVector hodge_type_above_newton(Rng& rng, const Isocrystal& iso) {
  std::vector<long> mu;
  for (const Rat& s : newton(iso).slopes.entries) mu.push_back(to_long(s));
  const long n = static_cast<long>(mu.size());
  long moves = rng.range(0, 3);
  for (long m = 0; m < moves; ++m) {
    long i = rng.range(0, n - 1);
    long j = rng.range(0, n - 1);
    if (i > j) std::swap(i, j);
    // transferring mass toward the front only raises the dominance order
    mu[static_cast<size_t>(i)] += 1;
    mu[static_cast<size_t>(j)] -= 1;
    std::sort(mu.begin(), mu.end(), std::greater<long>());
  }
  std::vector<Rat> entries;
  for (long v : mu) entries.emplace_back(v);
  return TypeVector(std::move(entries));
}

Filtration random_flag_of_type(Rng& rng, const TypeVector& mu) {
  const long n = mu.size();
  Mat flag = random_invertible(rng, n, -9, 9);
  std::vector<std::pair<Rat, Subspace>> steps;
  long used = 0;
  size_t i = 0;
  while (i < mu.entries.size()) {
    size_t j = i;
    while (j < mu.entries.size() && mu.entries[j] == mu.entries[i]) ++j;
    used += static_cast<long>(j - i);
    std::vector<std::vector<Rat>> rows;
    for (long r = 0; r < used; ++r) rows.push_back(flag.row(r));
    steps.emplace_back(mu.entries[i], Subspace::span_rows(n, rows));
    i = j;
  }
  return Filtration::from_steps(n, std::move(steps));
}

Filtration random_filtration(Rng& rng, long dim) {
  long r = rng.range(1, std::min<long>(dim, 3));
  std::vector<Rat> weights;
  while (static_cast<long>(weights.size()) < r) {
    Rat w = frac(rng.range(-6, 6), rng.range(1, 3));
    bool dup = false;
    for (const Rat& x : weights)
      if (x == w) dup = true;
    if (!dup) weights.push_back(w);
  }
  std::sort(weights.begin(), weights.end());  // smallest weight on the full space
  // step dimensions strictly decreasing from dim, one per weight
  std::vector<long> dims;
  long cur = dim;
  for (long k = 0; k < r; ++k) {
    long remaining_steps = r - 1 - k;
    long d = rng.range(remaining_steps + 1, cur - (k ? 1 : 0));
    if (k == 0) d = dim;
    dims.push_back(d);
    cur = d;
  }
  Mat flag = random_invertible(rng, dim, -5, 5);
  std::vector<std::pair<Rat, Subspace>> steps;
  for (long k = 0; k < r; ++k) {
    std::vector<std::vector<Rat>> rows;
    for (long i = 0; i < dims[static_cast<size_t>(k)]; ++i) rows.push_back(flag.row(i));
    steps.emplace_back(weights[static_cast<size_t>(k)],
                       Subspace::span_rows(dim, rows));
  }
  return Filtration::from_steps(dim, std::move(steps));
}

FilteredIsocrystal random_filtered(Rng& rng, long dim, const Int& p) {
  Isocrystal iso = random_split_isocrystal(rng, dim, p);
  std::vector<Rat> entries;
  for (long i = 0; i < dim; ++i) entries.emplace_back(rng.range(-2, 2));
  TypeVector mu(std::move(entries));
  Filtration hodge = random_flag_of_type(rng, mu);
  return FilteredIsocrystal(std::move(iso), std::move(hodge));
}

FilteredIsocrystal random_admissible(Rng& rng, long dim, const Int& p) {
  while (true) {
    Isocrystal iso = random_split_isocrystal(rng, dim, p);
    TypeVector mu = hodge_type_above_newton(rng, iso);
    for (int tries = 0; tries < 24; ++tries) {
      Filtration f = random_flag_of_type(rng, mu);
      FilteredIsocrystal fi(iso, f);
      if (is_weakly_admissible(fi).admissible) return fi;
    }
  }
}

Filtration random_stable_xi(Rng& rng, const FilteredIsocrystal& fi) {
  const Isocrystal& iso = fi.iso();
  const long n = iso.dim();
  std::vector<std::pair<Rat, Subspace>> steps;
  std::vector<Rat> weights;
  for (long i = 0; i < n; ++i)
    weights.push_back(frac(rng.range(-4, 4), rng.range(1, 2)));
  std::vector<Rat> distinct = weights;
  std::sort(distinct.begin(), distinct.end(), std::greater<Rat>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Subspace acc = Subspace::zero(n);
  for (const Rat& w : distinct) {
    std::vector<std::vector<Rat>> rows;
    for (long i = 0; i < n; ++i)
      if (weights[static_cast<size_t>(i)] == w)
        rows.push_back(iso.split().eigbasis.row(i));
    acc = sum_subspaces(acc, Subspace::span_rows(n, rows));
    steps.emplace_back(w, acc);
  }
  return Filtration::from_steps(n, std::move(steps));
}

Filtration random_wa_chain_xi(Rng& rng, const FilteredIsocrystal& fi,
                              const SplitTables& tables) {
  const long n = fi.dim();
  std::vector<std::uint32_t> chain{tables.full_mask()};
  std::uint32_t cur = tables.full_mask();
  while (true) {
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t m = 1; m < cur; ++m)
      if ((m & cur) == m && tables.wa(m)) candidates.push_back(m);
    if (candidates.empty() || rng.chance(1, 3)) break;
    cur = candidates[rng.below(candidates.size())];
    chain.push_back(cur);
  }
  // larger weights on smaller steps
  std::vector<Rat> weights;
  Rat w = frac(rng.range(-4, 2), rng.range(1, 2));
  for (size_t k = 0; k < chain.size(); ++k) {
    weights.push_back(w);
    w += frac(rng.range(1, 3), rng.range(1, 2));
  }
  std::vector<std::pair<Rat, Subspace>> steps;
  for (size_t k = 0; k < chain.size(); ++k)
    steps.emplace_back(weights[k], tables.span_of(chain[k]));
  return Filtration::from_steps(n, std::move(steps));
}

}  // namespace filiso
