#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hotring/checks.hpp"
#include "hotring/corpus.hpp"
#include "hotring/simplex.hpp"
#include "support.hpp"

using namespace hotring;
using hotring::testing::rng_for;

namespace {

Poly c(const RingPtr& r, std::vector<Coord> coords, Monomial m = {}) { return Poly::term(r, r->reduce(coords), m); }

}  // namespace

TEST_CASE("evaluation examples") {
  RingPtr r = corpus_ring("sq0_z3");
  const VarId x = var("x"), y = var("y");
  Poly p = c(r, {2}, Monomial::of(x, 2)) + c(r, {2}, Monomial::of(x));
  CHECK(p.eval(x, 1) == Poly::constant(r, r->reduce(std::vector<Coord>{4})));
  CHECK(p.eval(x, 0).is_zero());
  CHECK(p.eval(x, 1).vars().empty());
  Poly q = c(r, {1}, Monomial::of(x));
  CHECK(q.substitute({{x, IntPoly::variable(x) * IntPoly::variable(y)}}) == c(r, {1}, Monomial::of(x) * Monomial::of(y)));
  CHECK(q.substitute({{x, IntPoly::variable(x)}}) == q);
  CHECK_THROWS_AS(q.eval(VarId(60000), 0), UnknownVariable);
  CHECK_THROWS_AS(q.substitute({{VarId(60001), IntPoly(0)}}), UnknownVariable);
}

TEST_CASE("evaluation and substitution are ring homomorphisms") {
  Rng rng = rng_for(10);
  const VarId x = var("x"), y = var("y"), t = var("t");
  const std::map<VarId, IntPoly> sub{{x, IntPoly(1) - IntPoly::variable(x)},
                                     {y, IntPoly::variable(t) * IntPoly::variable(x) + IntPoly(2) * IntPoly::variable(y)}};
  for (const RingPtr& r : corpus_rings()) {
    if (r->rank() == 0) continue;
    CAPTURE(r->label());
    for (int k = 0; k < 1000; ++k) {
      Poly a = random_poly(r, {x, y}, 3, 4, rng), b = random_poly(r, {x, y}, 3, 4, rng);
      for (int v : {0, 1}) {
        REQUIRE((a + b).eval(x, v) == a.eval(x, v) + b.eval(x, v));
        REQUIRE((a * b).eval(x, v) == a.eval(x, v) * b.eval(x, v));
      }
      REQUIRE((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
      REQUIRE((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
    }
  }
}

TEST_CASE("t -> ty contracts R[t] onto its constants") {
  RingPtr r = corpus_ring("upper3_z2");
  Rng rng = rng_for(11);
  const VarId t = var("t"), y = var("y");
  for (int k = 0; k < 200; ++k) {
    Poly p = random_poly(r, {t}, 3, 4, rng);
    Poly h = p.substitute({{t, IntPoly::variable(t) * IntPoly::variable(y)}});
    CHECK(h.eval(y, 1) == p);
    CHECK(h.eval(y, 0) == Poly::constant(r, p.constant_term()));
  }
}

TEST_CASE("integer polynomial arithmetic detects overflow") {
  IntPoly big = IntPoly(std::int64_t(1) << 62);
  CHECK_THROWS(big * IntPoly(4));
}

TEST_CASE("division by a monic polynomial") {
  RingPtr r = corpus_ring("two_z8");
  Rng rng = rng_for(12);
  const VarId x = var("x"), y = var("y");
  for (int k = 0; k < 200; ++k) {
    Poly q = random_poly(r, {x, y}, 3, 3, rng);
    Poly p = loop_factor(x) * q;
    auto [quot, rem] = p.divide_monic(x, loop_factor(x));
    CHECK(rem.is_zero());
    CHECK(quot == q);
  }
}

TEST_CASE("simplicial operators") {
  RingPtr r = corpus_ring("sq0_z2");
  SUBCASE("index errors") {
    Poly p(r);
    CHECK_THROWS_AS(face(p, 2, 3), IndexOutOfRange);
    CHECK_THROWS_AS(face(p, 0, 0), IndexOutOfRange);
    CHECK_THROWS_AS(degeneracy(p, 1, -1), IndexOutOfRange);
    CHECK_THROWS_AS(face(Poly::term(r, r->generator(0), Monomial::of(simplex_var(3))), 2, 0), IndexOutOfRange);
  }
  SUBCASE("the faces of Delta^1 are the two evaluations") {
    Rng rng = rng_for(13);
    const VarId t = var("t");
    for (const RingPtr& ring : corpus_rings()) {
      for (int k = 0; k < 100; ++k) {
        Poly p = random_poly(ring, {t}, 3, 4, rng);
        Poly q = to_simplex1(p, t);
        CHECK(face(q, 1, 0) == p.eval(t, 0));
        CHECK(face(q, 1, 1) == p.eval(t, 1));
      }
    }
  }
  SUBCASE("s_0 then d_0 is the identity at level 2") {
    Rng rng = rng_for(14);
    for (int k = 0; k < 200; ++k) {
      Poly p = random_simplex_elem(corpus_ring("f3_unital"), 2, rng);
      CHECK(face(degeneracy(p, 2, 0), 3, 0) == p);
    }
  }
  SUBCASE("faces and degeneracies are homomorphisms") {
    Rng rng = rng_for(15);
    RingPtr u = corpus_ring("upper3_z2");
    for (int k = 0; k < 300; ++k) {
      const int n = 1 + int(rng() % 3), i = int(rng() % std::uint64_t(n + 1));
      Poly a = random_simplex_elem(u, n, rng), b = random_simplex_elem(u, n, rng);
      CHECK(face(a * b, n, i) == face(a, n, i) * face(b, n, i));
      CHECK(degeneracy(a * b, n, i) == degeneracy(a, n, i) * degeneracy(b, n, i));
      CHECK(face(a + b, n, i) == face(a, n, i) + face(b, n, i));
    }
  }
}

TEST_CASE("simplicial identities hold for every corpus ring up to level 4") {
  Rng rng = rng_for(16);
  for (const RingPtr& r : corpus_rings()) {
    SimplicialReport report = simplicial_identities(r, 4, 200, rng);
    CAPTURE(r->label());
    REQUIRE(report.families.size() == 5);
    for (const IdentityTally& t : report.families) {
      CAPTURE(t.family);
      CAPTURE(t.first_failure);
      CHECK(t.failures == 0);
    }
  }
}

TEST_CASE("vertex homotopies commute with the simplicial operators") {
  CHECK(face_of_vertex(2, 1) == 1);
  CHECK(face_of_vertex(2, 3) == 2);
  CHECK(degeneracy_of_vertex(-1, 0) == -1);
  CHECK(degeneracy_of_vertex(0, 0) == 1);
  Rng rng = rng_for(17);
  for (const RingPtr& r : corpus_rings()) {
    SimplicialReport report = vertex_homotopies(r, 3, 200, rng);
    CAPTURE(r->label());
    for (const IdentityTally& t : report.families) {
      CAPTURE(t.family);
      CAPTURE(t.first_failure);
      CHECK(t.failures == 0);
    }
  }
}

TEST_CASE("vertex homotopy at i = -1 kills x, at the top vertex fixes it") {
  RingPtr r = corpus_ring("two_z8");
  const VarId x = var("x");
  Poly p = c(r, {1}, Monomial::of(x, 2)) + c(r, {3}, Monomial::of(simplex_var(1)));
  CHECK(contraction_map(p, x, 1, -1) == p.eval(x, 0));
  CHECK(contraction_map(p, x, 1, 1) == p);
}
