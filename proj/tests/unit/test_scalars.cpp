#include <doctest.h>

#include "filiso/newton_polygon.hpp"
#include "filiso/rng.hpp"
#include "filiso/scalars.hpp"

using namespace filiso;

TEST_CASE("vp basics") {
  CHECK(vp(Rat(12), Int(2)) == 2);
  CHECK(vp(frac(3, 4), Int(2)) == -2);
  CHECK(vp(Rat(1), Int(2)) == 0);
  CHECK(vp(Rat(1), Int(7)) == 0);
  CHECK(vp(frac(-50, 3), Int(5)) == 2);
  CHECK_THROWS_AS(vp(Rat(0), Int(2)), MathError);
  CHECK_THROWS_AS(require_prime(Int(6)), MathError);
}

TEST_CASE("rational parsing round trips") {
  CHECK(rat_parse("3/4") == frac(3, 4));
  CHECK(rat_parse("-6/8") == frac(-3, 4));
  CHECK(rat_parse("7") == Rat(7));
  CHECK(rat_str(frac(10, 4)) == "5/2");
  CHECK(rat_str(Rat(-3)) == "-3");
  CHECK_THROWS_AS(rat_parse("x"), MathError);
}

TEST_CASE("newton polygon worked examples") {
  // x^2 - 3x + 2 = (x-1)(x-2), p = 2: root valuations {0, 1}
  auto s = newton_slopes({Rat(1), Rat(-3), Rat(2)}, Int(2));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == 0);
  CHECK(s[1] == 1);

  // x^2 - p: hull through (0,0),(2,1)
  for (long p : {2, 5, 13}) {
    auto t = newton_slopes({Rat(1), Rat(0), Rat(-p)}, Int(p));
    REQUIRE(t.size() == 2);
    CHECK(t[0] == frac(1, 2));
    CHECK(t[1] == frac(1, 2));
  }

  // x - 1
  auto u = newton_slopes({Rat(1), Rat(-1)}, Int(3));
  REQUIRE(u.size() == 1);
  CHECK(u[0] == 0);

  CHECK_THROWS_WITH_AS(newton_slopes({Rat(1), Rat(1), Rat(0)}, Int(2)),
                       "non-invertible Frobenius", MathError);
}

TEST_CASE("newton slopes of split polynomials equal root valuations") {
  Rng rng(2024);
  Int p(3);
  for (int iter = 0; iter < 200; ++iter) {
    long n = rng.range(1, 5);
    std::vector<Rat> roots;
    std::vector<long> expected;
    for (long i = 0; i < n; ++i) {
      long u;
      do {
        u = rng.range(-6, 6);
      } while (u == 0);
      long e = rng.range(-2, 2);
      roots.push_back(Rat(u) * p_power(p, e));
      expected.push_back(vp(roots.back(), p));
    }
    // expand prod (x - r_i)
    std::vector<Rat> coeffs{Rat(1)};
    for (const Rat& r : roots) {
      std::vector<Rat> next(coeffs.size() + 1, Rat(0));
      for (size_t k = 0; k < coeffs.size(); ++k) {
        next[k] += coeffs[k];
        next[k + 1] -= coeffs[k] * r;
      }
      coeffs = std::move(next);
    }
    auto slopes = newton_slopes(coeffs, p);
    std::sort(expected.begin(), expected.end());
    REQUIRE(slopes.size() == expected.size());
    for (size_t k = 0; k < slopes.size(); ++k) CHECK(slopes[k] == expected[k]);
  }
}

TEST_CASE("slope sum equals valuation of the constant term") {
  Rng rng(77);
  Int p(2);
  for (int iter = 0; iter < 200; ++iter) {
    long n = rng.range(1, 6);
    std::vector<Rat> coeffs{Rat(1)};
    for (long i = 0; i < n; ++i)
      coeffs.push_back(frac(rng.range(-20, 20), rng.range(1, 8)));
    if (coeffs.back() == 0) coeffs.back() = Rat(3);
    auto slopes = newton_slopes(coeffs, p);
    Rat total(0);
    for (const Rat& s : slopes) total += s;
    CHECK(total == Rat(vp(coeffs.back(), p)));
  }
}

TEST_CASE("polygon vertices form a strictly convex lower hull") {
  Rng rng(79);
  Int p(3);
  for (int iter = 0; iter < 100; ++iter) {
    long n = rng.range(1, 6);
    std::vector<Rat> coeffs{Rat(1)};
    for (long i = 0; i < n; ++i)
      coeffs.push_back(frac(rng.range(-30, 30), rng.range(1, 9)));
    if (coeffs.back() == 0) coeffs.back() = Rat(1);
    NewtonPolygon np = newton_polygon(coeffs, p);
    REQUIRE(np.vertices.size() >= 1);
    CHECK(np.vertices.front().first == 0);
    CHECK(np.vertices.back().first == n);
    for (size_t k = 0; k + 2 < np.vertices.size(); ++k) {
      const auto& a = np.vertices[k];
      const auto& b = np.vertices[k + 1];
      const auto& c = np.vertices[k + 2];
      Rat s1 = (b.second - a.second) / Rat(b.first - a.first);
      Rat s2 = (c.second - b.second) / Rat(c.first - b.first);
      CHECK(s1 < s2);
    }
    // slopes ascend
    for (size_t k = 0; k + 1 < np.slopes.size(); ++k)
      CHECK(np.slopes[k] <= np.slopes[k + 1]);
  }
}
