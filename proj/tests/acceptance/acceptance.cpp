// Acceptance suite: one line per criterion, exact arithmetic throughout,
// zero-tolerance comparisons.  Exits nonzero if any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "filiso/fargues.hpp"
#include "filiso/generate.hpp"
#include "filiso/json_io.hpp"
#include "filiso/lattice_dynamics.hpp"
#include "filiso/mazur.hpp"

using namespace filiso;

namespace {

int g_failures = 0;

void report(int num, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s C%d: %s (%s)\n", pass ? "PASS" : "FAIL", num, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string counts(long checked, long violations) {
  std::ostringstream os;
  os << checked << " checked, " << violations << " violations";
  return os.str();
}

// C1: the double-sum scalar product equals both graded-route evaluations.
void criterion1() {
  Rng rng(10001);
  long violations = 0;
  const long trials = 500;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    long n = trial.range(1, 6);
    Filtration a = random_filtration(trial, n);
    Filtration b = random_filtration(trial, n);
    Rat s = scalar_product(a, b);
    if (s != scalar_product_via_graded(a, b)) ++violations;
    if (s != scalar_product_via_graded(b, a)) ++violations;
  }
  report(1, "scalar product formula agreement", violations == 0,
         counts(trials, violations));
}

// C2: tensor scalar identity on random quadruples.
void criterion2() {
  Rng rng(10002);
  long violations = 0;
  const long trials = 500;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    long n1 = trial.range(1, 3), n2 = trial.range(1, 3);
    Filtration g1 = random_filtration(trial, n1);
    Filtration g2 = random_filtration(trial, n2);
    Filtration h1 = random_filtration(trial, n1);
    Filtration h2 = random_filtration(trial, n2);
    Rat lhs = scalar_product(tensor_filtration(g1, g2), tensor_filtration(h1, h2));
    Rat rhs = scalar_product(g1, h1) * Rat(n2) + scalar_product(g2, h2) * Rat(n1) +
              g1.degree() * h2.degree() + h1.degree() * g2.degree();
    if (lhs != rhs) ++violations;
  }
  report(2, "tensor scalar identity", violations == 0, counts(trials, violations));
}

// C3: Newton polygon slopes match eigenvalue valuations on split instances;
// the slope sum is vp(det phi) for arbitrary invertible phi.
void criterion3() {
  Rng rng(10003);
  long violations = 0;
  const long trials = 500;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    long n = trial.range(1, 6);
    Isocrystal iso = random_split_isocrystal(trial, n, p);
    std::vector<Rat> expect = iso.line_slopes();
    std::sort(expect.begin(), expect.end(), std::greater<Rat>());
    if (newton(iso).slopes.entries != expect) ++violations;
  }
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(trials + t));
    Int p = random_prime(trial);
    long n = trial.range(1, 6);
    Mat phi(n, n);
    do {
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          phi.at(i, j) = frac(trial.range(-9, 9), trial.range(1, 4));
    } while (phi.det() == 0);
    Isocrystal iso(p, phi);
    Rat total(0);
    for (const Rat& s : newton(iso).slopes.entries) total += s;
    if (total != Rat(vp(phi.det(), p))) ++violations;
  }
  report(3, "newton consistency", violations == 0, counts(2 * trials, violations));
}

std::vector<FilteredIsocrystal> corpus_1000() {
  Rng rng(10004);
  std::vector<FilteredIsocrystal> out;
  out.reserve(1000);
  for (long t = 0; t < 1000; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    long n = trial.range(2, 6);
    out.push_back(random_filtered(trial, n, random_prime(trial)));
  }
  return out;
}

// C4: enumeration verdict vs scalar-product conditions, all constructed
// Xi_{W,a,b} and sampled stable Xi; Newton cancellation on every sample.
void criterion4(const std::vector<FilteredIsocrystal>& corpus) {
  Rng rng(10005);
  long violations = 0;
  long t = 0;
  for (const FilteredIsocrystal& fi : corpus) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t++));
    SplitTables tab(fi);
    NewtonData nd = newton(fi.iso());
    bool verdict = is_weakly_admissible(fi).admissible;

    const std::pair<long, long> windows[] = {{0, 1}, {-1, 1}, {0, 2}};
    bool conditions_hold = true;

    // all constructed Xi_{W,a,b}, via the exact two-term evaluations
    std::uint32_t full = tab.full_mask();
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      for (auto [a, b] : windows) {
        Rat lhs = Rat(a) * tab.deg_hodge(full) + Rat(b - a) * tab.deg_hodge(mask);
        Rat rhs = Rat(a) * tab.deg_newton(full) + Rat(b - a) * tab.deg_newton(mask);
        if (lhs > rhs) conditions_hold = false;
      }

    // cross-check the closed form against the real scalar product on a few
    // windows, and run sampled stable Xi through the real product
    for (int k = 0; k < 6; ++k) {
      std::uint32_t mask = static_cast<std::uint32_t>(trial.below(full + 1));
      auto [a, b] = windows[trial.below(3)];
      Filtration xi = xi_from(tab.span_of(mask), Rat(a), Rat(b));
      ScalarPair sp = check_scalar_inequalities(fi, xi, true);
      if (sp.hodge_side !=
          Rat(a) * tab.deg_hodge(full) + Rat(b - a) * tab.deg_hodge(mask))
        ++violations;
      if (sp.newton_side !=
          Rat(a) * tab.deg_newton(full) + Rat(b - a) * tab.deg_newton(mask))
        ++violations;
    }
    for (int k = 0; k < 5; ++k) {
      Filtration xi = random_stable_xi(trial, fi);
      ScalarPair sp = check_scalar_inequalities(fi, xi, true);
      if (sp.hodge_side > sp.newton_side) conditions_hold = false;
      // condition (3) route and the cancellation identity
      Rat opp = scalar_product(nd.filtration_opposed(), xi);
      if (sp.newton_side + opp != 0) ++violations;
      if ((sp.hodge_side + opp <= 0) != (sp.hodge_side <= sp.newton_side))
        ++violations;
    }
    if (verdict != conditions_hold) ++violations;
  }
  report(4, "weak admissibility scalar-product equivalence", violations == 0,
         counts(static_cast<long>(corpus.size()), violations));
}

// C5: F_HN trivial iff weakly admissible; the exact identity
// <F_H,F_HN> - <F_N,F_HN> = |F_HN|^2 on the whole corpus.
void criterion5(const std::vector<FilteredIsocrystal>& corpus) {
  long violations = 0;
  for (const FilteredIsocrystal& fi : corpus) {
    bool wa = is_weakly_admissible(fi).admissible;
    Filtration hn = hn_filtration(fi);
    if ((hn == Filtration::trivial(fi.dim())) != wa) ++violations;
    HnIdentity id = verify_hn_identity(fi);
    if (!id.holds) ++violations;
  }
  report(5, "HN triviality and exact identity", violations == 0,
         counts(static_cast<long>(corpus.size()), violations));
}

// C6: HN graded slopes strictly decreasing; every piece semistable under
// re-enumeration.
void criterion6(const std::vector<FilteredIsocrystal>& corpus) {
  long violations = 0;
  for (const FilteredIsocrystal& fi : corpus) {
    HnResult res = hn_with_pieces(fi);
    for (size_t i = 0; i < res.pieces.size(); ++i) {
      if (!res.pieces[i].semistable) ++violations;
      if (i + 1 < res.pieces.size() &&
          !(res.pieces[i].slope > res.pieces[i + 1].slope))
        ++violations;
    }
  }
  report(6, "HN structure", violations == 0,
         counts(static_cast<long>(corpus.size()), violations));
}

// C7: tensor product of weakly admissible objects stays weakly admissible.
void criterion7() {
  Rng rng(10007);
  long violations = 0, done = 0;
  std::uint64_t stream = 0;
  while (done < 500) {
    Rng trial = rng.fork(stream++);
    Int p = random_prime(trial);
    FilteredIsocrystal a = random_admissible(trial, trial.range(1, 3), p);
    FilteredIsocrystal b = random_admissible(trial, trial.range(1, 3), p);
    TensorIso prod = tensor_isocrystal(a.iso(), b.iso());
    if (prod.collision) continue;
    FilteredIsocrystal fi(prod.iso, tensor_filtration(a.hodge(), b.hodge()));
    if (!is_weakly_admissible(fi).admissible) ++violations;
    ++done;
  }
  report(7, "tensor closure of weak admissibility", violations == 0,
         counts(done, violations));
}

// C8: membership characterization both ways, sampled projection optimality,
// perturbation inequality at eps = gap/4, F_F structure.
void criterion8() {
  Rng rng(10008);
  long violations = 0;
  const long instances = 200;
  for (long t = 0; t < instances; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    FilteredIsocrystal fi = random_admissible(trial, trial.range(2, 5), p);
    SplitTables tab(fi);
    FarguesResult res = fargues_filtration(fi);

    for (size_t i = 0; i < res.pieces.size(); ++i) {
      if (!res.pieces[i].semistable) ++violations;
      if (i + 1 < res.pieces.size() &&
          !(res.pieces[i].weight > res.pieces[i + 1].weight))
        ++violations;
      if (!is_wa_subobject(fi, res.pieces[i].step)) ++violations;
    }

    std::vector<Filtration> samples;
    samples.push_back(res.filtration);
    samples.push_back(Filtration::trivial(fi.dim()));
    for (int k = 0; k < 49; ++k) samples.push_back(random_wa_chain_xi(trial, fi, tab));
    for (int k = 0; k < 49; ++k) samples.push_back(random_stable_xi(trial, fi));
    try {
      if (!check_projection_optimality(fi, res, samples)) ++violations;
    } catch (const InternalError&) {
      ++violations;  // characterization mismatch
    }

    if (res.pieces.size() > 1) {
      Rat gap = res.pieces[0].weight - res.pieces[1].weight;
      for (size_t i = 1; i + 1 < res.pieces.size(); ++i) {
        Rat g = res.pieces[i].weight - res.pieces[i + 1].weight;
        if (g < gap) gap = g;
      }
      if (!check_perturbation_inequality(fi, res, gap / Rat(4))) ++violations;
    } else {
      if (!check_perturbation_inequality(fi, res, frac(1, 4))) ++violations;
    }
  }
  report(8, "Fargues characterization, projection, perturbation",
         violations == 0, counts(instances, violations));
}

// C9: Fargues filtration is a tensor functor; semistable x semistable is
// semistable of the summed slope.
void criterion9() {
  Rng rng(10009);
  long violations = 0, done = 0, semistable_pairs = 0;
  std::uint64_t stream = 0;
  while (done < 300) {
    Rng trial = rng.fork(stream++);
    Int p = random_prime(trial);
    FilteredIsocrystal a = random_admissible(trial, trial.range(1, 3), p);
    FilteredIsocrystal b = random_admissible(trial, trial.range(1, 3), p);
    TensorIso prod = tensor_isocrystal(a.iso(), b.iso());
    if (prod.collision) continue;
    FilteredIsocrystal fi(prod.iso, tensor_filtration(a.hodge(), b.hodge()));

    FarguesResult fa = fargues_filtration(a);
    FarguesResult fb = fargues_filtration(b);
    FarguesResult fp = fargues_filtration(fi);
    if (fp.filtration != tensor_filtration(fa.filtration, fb.filtration))
      ++violations;

    if (fa.pieces.size() == 1 && fb.pieces.size() == 1) {
      ++semistable_pairs;
      if (fp.pieces.size() != 1)
        ++violations;
      else if (fp.pieces[0].weight != fa.pieces[0].weight + fb.pieces[0].weight)
        ++violations;
    }
    ++done;
  }
  std::ostringstream os;
  os << done << " pairs (" << semistable_pairs << " semistable), " << violations
     << " violations";
  report(9, "Fargues tensor compatibility", violations == 0, os.str());
}

// C10: Mazur inequality fuzz.
void criterion10() {
  Rng rng(10010);
  long violations = 0;
  const long trials = 1000;
  for (long t = 0; t < trials; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    long n = trial.range(1, 5);
    Isocrystal iso = random_split_isocrystal(trial, n, p);
    Lattice l = random_lattice(trial, n, p);
    MazurOutcome out = mazur_check(iso, l);
    if (!out.ok) ++violations;
    if (out.mu.sum() != out.nu.sum()) ++violations;
    if (out.mu.sum() != Rat(vp(iso.phi().det(), p))) ++violations;
  }
  report(10, "Mazur inequality fuzz", violations == 0, counts(trials, violations));
}

// C11: Laffaille consistency on a curated fixture suite with wa status
// derived by enumeration, plus the strongly-divisible tensor check.
void criterion11() {
  Rng rng(10011);
  long violations = 0;

  std::vector<FilteredIsocrystal> fixtures;
  {
    // the worked 2x2 family
    Mat phi{{1, 0}, {0, 2}};
    SplitData sd{{Rat(1), Rat(2)}, Mat::identity(2)};
    Isocrystal ord(Int(2), phi, sd);
    auto jump = [&](long x, long y) {
      Mat m(1, 2);
      m.at(0, 0) = Rat(x);
      m.at(0, 1) = Rat(y);
      return Filtration::from_steps(
          2, {{Rat(0), Subspace::full(2)}, {Rat(1), Subspace::span(2, m)}});
    };
    fixtures.emplace_back(ord, jump(1, 1));
    fixtures.emplace_back(ord, jump(0, 1));
    fixtures.emplace_back(ord, jump(1, 0));
    fixtures.emplace_back(ord, Filtration::trivial(2));
  }
  for (long t = 0; static_cast<long>(fixtures.size()) < 12; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    fixtures.push_back(random_admissible(trial, trial.range(2, 3), Int(2)));
  }
  for (long t = 100; static_cast<long>(fixtures.size()) < 22; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    FilteredIsocrystal fi = random_filtered(trial, trial.range(2, 3), Int(2));
    if (!is_weakly_admissible(fi).admissible) fixtures.push_back(fi);
  }

  std::vector<std::pair<FilteredIsocrystal, Lattice>> divisible;
  long idx = 0;
  for (const FilteredIsocrystal& fi : fixtures) {
    bool wa = is_weakly_admissible(fi).admissible;
    long radius = default_radius_bound(fi);
    long steps = 4 * radius + 50;
    Rng trial = rng.fork(static_cast<std::uint64_t>(1000 + idx++));
    std::vector<Lattice> starts{Lattice::standard(fi.dim(), fi.iso().p()),
                                random_lattice(trial, fi.dim(), fi.iso().p())};
    bool diverged = false;
    for (const Lattice& start : starts) {
      OrbitReport rep = orbit_probe(fi, start, steps, radius);
      if (rep.status == OrbitReport::Status::fixed_point) {
        if (!(alpha(fi, *rep.fixed) == *rep.fixed)) ++violations;
        if (!wa) ++violations;
        divisible.emplace_back(fi, *rep.fixed);
      }
      if (rep.status == OrbitReport::Status::diverging) {
        diverged = true;
        if (wa) ++violations;
      }
    }
    if (!wa && !diverged) ++violations;
  }

  long pairs = 0;
  for (size_t i = 0; i < divisible.size() && i < 6; ++i)
    for (size_t j = 0; j < divisible.size() && j < 6; ++j) {
      if (divisible[i].first.iso().p() != divisible[j].first.iso().p()) continue;
      ++pairs;
      if (!sd_tensor_check(divisible[i].first, divisible[i].second,
                           divisible[j].first, divisible[j].second))
        ++violations;
    }

  std::ostringstream os;
  os << fixtures.size() << " fixtures, " << divisible.size()
     << " fixed lattices, " << pairs << " tensor pairs, " << violations
     << " violations";
  report(11, "Laffaille orbit consistency and sd tensor closure",
         violations == 0, os.str());
}

// C12: adm_search soundness and the central-Frobenius counterexample.
void criterion12() {
  Rng rng(10012);
  long violations = 0, found = 0;
  for (long t = 0; t < 30; ++t) {
    Rng trial = rng.fork(static_cast<std::uint64_t>(t));
    Int p = random_prime(trial);
    long n = trial.range(1, 4);
    Isocrystal iso = random_split_isocrystal(trial, n, p);
    TypeVector mu = hodge_type_above_newton(trial, iso);
    AdmSearchResult r = adm_search(iso, mu, 40, trial.next());
    if (r.filtration) {
      ++found;
      if (!(type_of(*r.filtration) == mu)) ++violations;
      if (!is_weakly_admissible(FilteredIsocrystal(iso, *r.filtration)).admissible)
        ++violations;
    }
  }
  // phi central: nu = 0 <= mu but no admissible filtration of nonzero type
  Isocrystal central(Int(2), Mat::identity(2));
  AdmSearchResult r = adm_search(central, TypeVector({Rat(1), Rat(-1)}), 60, 5);
  if (r.filtration.has_value()) ++violations;
  if (r.reason == "Mazur obstruction") ++violations;
  AdmSearchResult zero = adm_search(central, TypeVector({Rat(0), Rat(0)}), 4, 5);
  if (!zero.filtration.has_value()) ++violations;

  std::ostringstream os;
  os << found << "/30 searches succeeded, counterexample empty, " << violations
     << " violations";
  report(12, "adm_search soundness", violations == 0, os.str());
}

// C13: byte-identical CLI reports under a fixed seed.
void criterion13(const std::string& cli, const std::string& fixtures_dir) {
  if (cli.empty()) {
    report(13, "CLI determinism", false, "no --cli path given");
    return;
  }
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  auto run = [&](const std::string& args, const std::string& out) {
    std::string cmd = cli + " " + args + " --out " + out;
    return std::system(cmd.c_str());
  };
  bool ok = true;
  std::string detail;

  const char* tmp = "/tmp/filiso_accept";
  if (std::system((std::string("mkdir -p ") + tmp).c_str()) != 0) {
    report(13, "CLI determinism", false, "cannot create scratch directory");
    return;
  }
  for (const std::string& args :
       {std::string("mazur-fuzz --trials 120 --seed 7"),
        std::string("identity-suite --trials 40 --seed 3"),
        std::string("gen --dim 3 --p 5 --seed 42")}) {
    std::string f1 = std::string(tmp) + "/r1.json";
    std::string f2 = std::string(tmp) + "/r2.json";
    int c1 = run(args, f1);
    int c2 = run(args, f2);
    if (c1 != 0 || c2 != 0) {
      ok = false;
      detail = "nonzero exit for: " + args;
      break;
    }
    if (slurp(f1) != slurp(f2) || slurp(f1).empty()) {
      ok = false;
      detail = "outputs differ for: " + args;
      break;
    }
  }
  if (ok && !fixtures_dir.empty()) {
    std::string f1 = std::string(tmp) + "/wa1.json";
    std::string f2 = std::string(tmp) + "/wa2.json";
    std::string args = "check-wa " + fixtures_dir + "/fixture_ordinary.json";
    if (run(args, f1) != 0 || run(args, f2) != 0 || slurp(f1) != slurp(f2)) {
      ok = false;
      detail = "check-wa not deterministic";
    } else {
      json j = json::parse(slurp(f1));
      if (j.at("admissible") != json(true)) {
        ok = false;
        detail = "ordinary fixture misjudged";
      }
    }
  }
  if (ok) detail = "byte-identical reports";
  report(13, "CLI determinism", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, fixtures_dir;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--fixtures") fixtures_dir = argv[i + 1];
  }

  criterion1();
  criterion2();
  criterion3();
  std::vector<FilteredIsocrystal> corpus = corpus_1000();
  criterion4(corpus);
  criterion5(corpus);
  criterion6(corpus);
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13(cli, fixtures_dir);

  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
