#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "weakring/constructions.hpp"
#include "weakring/structure.hpp"

using namespace weakring;
using support::as_set;
using Set = std::set<std::size_t>;

TEST_CASE("element sets of Z_n match the oracle") {
  for (std::size_t n = 1; n <= 36; ++n) {
    CAPTURE(n);
    const auto r = make_zmod(n);
    const auto o = oracle::zmod(n);
    CHECK(as_set(idempotents(r).members) == oracle::idempotents(o));
    CHECK(as_set(units(r).members) == oracle::units(o));
    CHECK(as_set(nilpotents(r).members) == oracle::nilpotents(o));
    CHECK(as_set(quasi_regular_elements(r).members) == oracle::quasi_regular(o));
    CHECK(as_set(jacobson_radical(r).members()) == oracle::radical(o));
    CHECK(center(r).size() == n);
  }
}

TEST_CASE("frozen element sets") {
  const auto z6 = make_zmod(6);
  CHECK(as_set(idempotents(z6).members) == Set{0, 1, 3, 4});
  CHECK(as_set(units(z6).members) == Set{1, 5});
  CHECK(as_set(units(make_zmod(2)).members) == Set{1});
  CHECK(as_set(nilpotents(make_zmod(4)).members) == Set{0, 2});
  CHECK(as_set(jacobson_radical(make_zmod(9)).members()) == Set{0, 3, 6});
  CHECK(as_set(jacobson_radical(make_zmod(2)).members()) == Set{0});
  CHECK(as_set(quasi_regular_elements(make_zmod(2)).members) == Set{0});
  CHECK(as_set(quasi_regular_elements(make_zmod(9)).members) == Set{0, 2, 3, 5, 6, 8});
  CHECK(as_set(quasi_regular_elements(make_zmod(3)).members) == Set{0, 2});
  CHECK(idempotents(z6).kind == SetKind::idempotents);
}

TEST_CASE("element sets of the dual numbers match the oracle") {
  for (std::size_t p : {2, 3, 5}) {
    const auto r = support::ring("ext(Z" + std::to_string(p) + ", zero " + std::to_string(p) + ")");
    const auto o = oracle::zmod_dual(p);
    CHECK(as_set(idempotents(r).members) == oracle::idempotents(o));
    CHECK(as_set(units(r).members) == oracle::units(o));
    CHECK(as_set(nilpotents(r).members) == oracle::nilpotents(o));
    CHECK(as_set(jacobson_radical(r).members()) == oracle::radical(o));
  }
}

TEST_CASE("abelian rings") {
  CHECK(is_abelian(make_zmod(6)));
  CHECK(is_abelian(support::ring("S2(Z2)")));
  CHECK(is_abelian(support::ring("S3(Z2)")));

  // Full upper-triangular 2x2 over Z2: entries (a, b, d) packed as 4a + 2b + d.
  std::vector<Elem> add(64), mul(64);
  auto unpack = [](Elem x) { return std::array<Elem, 3>{x >> 2 & 1u, x >> 1 & 1u, x & 1u}; };
  auto pack = [](Elem a, Elem b, Elem d) { return (a % 2) << 2 | (b % 2) << 1 | (d % 2); };
  for (Elem x = 0; x < 8; ++x) {
    for (Elem y = 0; y < 8; ++y) {
      const auto [a, b, d] = unpack(x);
      const auto [e, f, g] = unpack(y);
      add[x * 8 + y] = pack(a + e, b + f, d + g);
      mul[x * 8 + y] = pack(a * e, a * f + b * g, d * g);
    }
  }
  const auto t2 = std::make_shared<const FiniteRing>(8, add, mul, pack(1, 0, 1));
  REQUIRE(verify_ring_axioms(*t2).ok);
  CHECK_FALSE(is_abelian(t2));
  CHECK(idempotents(t2).size() == 6);
  CHECK_FALSE(is_central(*t2, pack(1, 0, 0)));
}

TEST_CASE("unit and nilpotent predicates") {
  const auto z8 = make_zmod(8);
  CHECK(is_unit(*z8, 3));
  CHECK_FALSE(is_unit(*z8, 4));
  CHECK(is_nilpotent(*z8, 6));
  CHECK_FALSE(is_nilpotent(*z8, 5));
  CHECK(is_central(*z8, 5));
}
