#include <doctest.h>

#include "filiso/generate.hpp"
#include "filiso/json_io.hpp"
#include "filiso/rng.hpp"

using namespace filiso;

TEST_CASE("rationals as strings") {
  CHECK(rat_to_json(frac(3, 4)) == json("3/4"));
  CHECK(rat_to_json(Rat(-2)) == json("-2"));
  CHECK(rat_from_json(json("10/4")) == frac(5, 2));
  CHECK(rat_from_json(json(7)) == Rat(7));
  CHECK_THROWS_AS(rat_from_json(json(1.5)), MathError);
}

TEST_CASE("filtration encoding round trips") {
  Rng rng(173);
  for (int iter = 0; iter < 30; ++iter) {
    Filtration f = random_filtration(rng, rng.range(1, 4));
    json j = filtration_to_json(f);
    CHECK(filtration_from_json(j) == f);
    CHECK(j.contains("dim"));
    CHECK(j.contains("breakpoints"));
  }
}

TEST_CASE("instance encoding round trips") {
  Rng rng(179);
  for (int iter = 0; iter < 20; ++iter) {
    long n = rng.range(1, 4);
    FilteredIsocrystal fi = random_filtered(rng, n, random_prime(rng));
    InstanceDoc doc = doc_of(fi);
    doc.lattice = random_lattice(rng, n, fi.iso().p()).basis();
    json j = instance_to_json(doc);
    InstanceDoc back = instance_from_json(j);
    CHECK(back.p == doc.p);
    CHECK(back.phi == doc.phi);
    REQUIRE(back.split.has_value());
    CHECK(back.split->eigvals == doc.split->eigvals);
    CHECK(back.split->eigbasis == doc.split->eigbasis);
    REQUIRE(back.hodge.has_value());
    CHECK(*back.hodge == *doc.hodge);
    REQUIRE(back.lattice.has_value());
    CHECK(*back.lattice == *doc.lattice);
    // reconstruct the objects
    FilteredIsocrystal fi2 = instance_filtered(back);
    CHECK(fi2.hodge() == fi.hodge());
    CHECK(fi2.iso().phi() == fi.iso().phi());
    // identical dumps: serialization is deterministic
    CHECK(instance_to_json(back).dump() == j.dump());
    CHECK(json_hash(j) == json_hash(instance_to_json(back)));
  }
}

TEST_CASE("verdict and orbit encodings carry their payloads") {
  Rng rng(181);
  FilteredIsocrystal fi = random_filtered(rng, 2, Int(2));
  json v = verdict_to_json(is_weakly_admissible(fi));
  CHECK(v.contains("admissible"));
  if (!v["admissible"].get<bool>()) CHECK(v.contains("witness"));
}
