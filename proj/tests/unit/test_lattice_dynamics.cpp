#include <doctest.h>

#include "filiso/generate.hpp"
#include "filiso/lattice_dynamics.hpp"
#include "filiso/rng.hpp"

using namespace filiso;

namespace {

Isocrystal ordinary(long p = 2) {
  Mat phi{{1, 0}, {0, p}};
  SplitData sd{{Rat(1), Rat(p)}, Mat::identity(2)};
  return Isocrystal(Int(p), phi, sd);
}

Filtration jump_at(long n, const Subspace& w) {
  return Filtration::from_steps(n, {{Rat(0), Subspace::full(n)}, {Rat(1), w}});
}

Subspace line(long n, std::initializer_list<long> v) {
  Mat m(1, n);
  long j = 0;
  for (long x : v) m.at(0, j++) = Rat(x);
  return Subspace::span(n, m);
}

}  // namespace

TEST_CASE("plus_op worked examples") {
  Int p(2);
  Lattice l = Lattice::standard(2, p);
  CHECK(plus_op(l, Filtration::trivial(2)) == l);

  // all weights c multiplies by p^{-c}
  for (long c : {-2, 1, 3}) {
    CHECK(plus_op(l, Filtration::trivial(2, Rat(c))) == l.scaled_by_p_power(-c));
  }

  // jump 1 at span(e1): p^{-1} e1 and e2
  Lattice r = plus_op(l, jump_at(2, line(2, {1, 0})));
  Mat expect{{1, 0}, {0, 2}};
  CHECK(r == Lattice(expect.scaled(frac(1, 2)), p));

  CHECK_THROWS_WITH_AS(
      plus_op(l, Filtration::trivial(2, frac(1, 2))), "Gamma=Z required",
      ModelError);
}

TEST_CASE("plus_op equivariance, shift and monotonicity") {
  Rng rng(149);
  Int p(2);
  for (int iter = 0; iter < 30; ++iter) {
    long n = rng.range(1, 4);
    Lattice l = random_lattice(rng, n, p);
    std::vector<Rat> entries;
    for (long i = 0; i < n; ++i) entries.emplace_back(rng.range(-2, 2));
    Filtration f = random_flag_of_type(rng, TypeVector(std::move(entries)));

    // equivariance under an invertible change of coordinates
    Mat g(n, n);
    while (g.det() == 0)
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) g.at(i, j) = Rat(rng.range(-3, 3));
    std::vector<std::pair<Rat, Subspace>> moved_steps;
    for (const auto& [w, s] : f.breakpoints())
      moved_steps.emplace_back(
          w, Subspace::span(n, s.basis() * g.transpose()));
    Filtration gf = Filtration::from_steps(n, std::move(moved_steps));
    CHECK(plus_op(l.apply(g), gf) == plus_op(l, f).apply(g));

    // weight shift scales by a p power
    Filtration shifted = f.shift_weights(Rat(2));
    CHECK(plus_op(l, shifted) == plus_op(l, f).scaled_by_p_power(-2));

    // monotonicity in the lattice
    Lattice smaller = l.scaled_by_p_power(1);
    CHECK(plus_op(smaller, f).subset_of(plus_op(l, f)));
  }
}

TEST_CASE("strongly divisible worked example") {
  Isocrystal iso = ordinary();
  FilteredIsocrystal fi(iso, jump_at(2, line(2, {0, 1})));
  Lattice l = Lattice::standard(2, Int(2));
  CHECK(alpha(fi, l) == l);
  CHECK(is_strongly_divisible(fi, l));

  Mat b{{1, 0}, {0, 2}};
  CHECK(is_strongly_divisible(fi, Lattice(b, Int(2))));

  // phi = id with the trivial filtration fixes everything (alpha does not
  // need the split model)
  Isocrystal id2(Int(2), Mat::identity(2));
  FilteredIsocrystal triv(id2, Filtration::trivial(2));
  Lattice any = Lattice(Mat{{3, 1}, {0, 4}}, Int(2));
  CHECK(alpha(triv, any) == any);
}

TEST_CASE("orbit probe statuses") {
  Isocrystal iso = ordinary();

  // strongly divisible start: fixed point at step 0
  FilteredIsocrystal good(iso, jump_at(2, line(2, {0, 1})));
  Lattice l = Lattice::standard(2, Int(2));
  OrbitReport rep = orbit_probe(good, l, kDefaultOrbitSteps,
                                default_radius_bound(good));
  CHECK(rep.status == OrbitReport::Status::fixed_point);
  CHECK(rep.steps == 0);

  // admissible instance, generic start: stays bounded (or lands on a fixed
  // point)
  FilteredIsocrystal adm(iso, jump_at(2, line(2, {1, 1})));
  REQUIRE(is_weakly_admissible(adm).admissible);
  Lattice start(Mat{{4, 1}, {1, 1}}, Int(2));
  OrbitReport rep2 = orbit_probe(adm, start, kDefaultOrbitSteps,
                                 default_radius_bound(adm));
  CHECK(rep2.status != OrbitReport::Status::diverging);

  // non-admissible: diverges, with a linearly growing trace
  FilteredIsocrystal bad(iso, jump_at(2, line(2, {1, 0})));
  REQUIRE_FALSE(is_weakly_admissible(bad).admissible);
  OrbitReport rep3 = orbit_probe(bad, l, kDefaultOrbitSteps,
                                 default_radius_bound(bad));
  CHECK(rep3.status == OrbitReport::Status::diverging);
  CHECK(rep3.first_exit_step > 0);
  REQUIRE(rep3.trace.size() >= 2);
  CHECK(rep3.trace.back() > rep3.trace.front());
}

TEST_CASE("fixed points only on admissible instances") {
  Rng rng(151);
  for (int iter = 0; iter < 20; ++iter) {
    long n = rng.range(2, 3);
    FilteredIsocrystal fi = random_filtered(rng, n, Int(2));
    Lattice start = random_lattice(rng, n, Int(2));
    OrbitReport rep = orbit_probe(fi, start, 60, default_radius_bound(fi));
    if (rep.status == OrbitReport::Status::fixed_point) {
      CHECK(alpha(fi, *rep.fixed) == *rep.fixed);
      CHECK(is_weakly_admissible(fi).admissible);
    }
    if (rep.status == OrbitReport::Status::diverging)
      CHECK_FALSE(is_weakly_admissible(fi).admissible);
  }
}

TEST_CASE("strongly divisible tensor products") {
  Isocrystal iso = ordinary();
  FilteredIsocrystal fi(iso, jump_at(2, line(2, {0, 1})));
  Lattice l = Lattice::standard(2, Int(2));
  REQUIRE(is_strongly_divisible(fi, l));

  // rank one twists
  Mat phi1(1, 1);
  phi1.at(0, 0) = Rat(2);
  Isocrystal one(Int(2), phi1, SplitData{{Rat(2)}, Mat::identity(1)});
  FilteredIsocrystal twist(one, Filtration::trivial(1, Rat(1)));
  Lattice l1 = Lattice::standard(1, Int(2));
  REQUIRE(is_strongly_divisible(twist, l1));
  CHECK(sd_tensor_check(twist, l1, twist, l1));

  // dim 2 x dim 2
  CHECK(sd_tensor_check(fi, l, fi, l));

  CHECK_THROWS_WITH_AS(
      sd_tensor_check(FilteredIsocrystal(iso, jump_at(2, line(2, {1, 0}))), l,
                      fi, l),
      "inputs must be strongly divisible", MathError);
}
