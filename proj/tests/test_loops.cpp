#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hotring/corpus.hpp"
#include "hotring/homs.hpp"
#include "hotring/loops.hpp"
#include "support.hpp"

using namespace hotring;
using hotring::testing::rng_for;

namespace {

VElem term(const RingPtr& r, std::vector<Coord> coords, Monomial m = {}) {
  return VElem::leaf(Poly::term(r, r->reduce(coords), m));
}

std::vector<RingPtr> nonzero_corpus() {
  std::vector<RingPtr> out;
  for (const RingPtr& r : corpus_rings())
    if (r->rank() > 0) out.push_back(r);
  return out;
}

}  // namespace

TEST_CASE("path and loop ring membership") {
  RingPtr r = corpus_ring("sq0_z3");
  VRing b = VirtualRing::finite(r);
  VRing e = path_ring(b), w = loop_ring(b);
  const VarId x = e->variable();
  CHECK(w->variable() == x);
  VElem xa = term(r, {1}, Monomial::of(x));
  CHECK(e->contains(xa));
  CHECK_FALSE(w->contains(xa));
  CHECK(w->contains(loop_factor(x) * term(r, {2})));
  CHECK(e->contains(e->zero()));
  CHECK(w->contains(w->zero()));
  CHECK_FALSE(e->contains(term(r, {1})));
  CHECK_THROWS_AS(sigma(w).checked(xa), MembershipViolation);
}

TEST_CASE("sigma is an involution fixing (x^2 - x) times constants") {
  Rng rng = rng_for(20);
  for (const RingPtr& r : nonzero_corpus()) {
    VRing w = loop_ring(VirtualRing::finite(r));
    const VarId x = w->variable();
    VirtualHom s = sigma(w);
    for (const RingElem& a : r->elements()) {
      VElem f = loop_factor(x) * VElem::leaf(Poly::constant(r, a));
      CHECK(s(f) == f);
    }
    for (const VElem& p : probes(w, 1000, rng, 4)) REQUIRE(s(s(p)) == p);
    HomCheck h = check_hom(s, probes(w, 40, rng));
    CAPTURE(h.failure);
    CHECK(h.ok);
  }
}

TEST_CASE("tau swaps the loop variables and squares to the identity") {
  RingPtr r = corpus_ring("f3_unital");
  VRing w = loop_ring(VirtualRing::finite(r));
  VRing w2 = loop_ring(w);
  const VarId x = w->variable(), y = w2->variable();
  CHECK(x != y);
  VElem f = loop_factor(x) * loop_factor(y) * term(r, {1}, Monomial::of(x, 2) * Monomial::of(y));
  VElem g = loop_factor(x) * loop_factor(y) * term(r, {1}, Monomial::of(x) * Monomial::of(y, 2));
  CHECK(tau(w2)(f) == g);
  Rng rng = rng_for(21);
  for (const RingPtr& ring : nonzero_corpus()) {
    VRing l2 = loop_ring(loop_ring(VirtualRing::finite(ring)));
    VirtualHom t = tau(l2);
    for (const VElem& p : probes(l2, 1000, rng, 3)) REQUIRE(t(t(p)) == p);
    CHECK(check_hom(t, probes(l2, 30, rng)).ok);
  }
}

TEST_CASE("the swap homotopy connects tau to the identity") {
  Rng rng = rng_for(22);
  for (const RingPtr& r : nonzero_corpus()) {
    CAPTURE(r->label());
    VRing l2 = loop_ring(loop_ring(VirtualRing::finite(r)));
    const VarId t = fresh_var("t", l2->variables());
    VirtualHom h = swap_homotopy_map(l2, t);
    VirtualHom swap = tau(l2);
    auto ps = probes(l2, 200, rng, 3);
    for (const VElem& p : ps) {
      VElem hp = h(p);
      REQUIRE(h.target()->contains(hp));
      REQUIRE(hp.eval(t, 1) == p);
      REQUIRE(hp.eval(t, 0) == swap(p));
    }
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) REQUIRE(h(ps[i] + ps[i + 1]) == h(ps[i]) + h(ps[i + 1]));
  }
}

TEST_CASE("the swap homotopy is multiplicative only where products vanish") {
  Rng rng = rng_for(23);
  // Square-zero coefficients: every product is zero on both sides.
  VRing sq = loop_ring(loop_ring(VirtualRing::finite(corpus_ring("sq0_z2"))));
  HomCheck ok = check_hom(swap_homotopy_map(sq, fresh_var("t", sq->variables())), probes(sq, 20, rng));
  CHECK(ok.ok);
  // Over a unital base, f = g = (x^2 - x)(y^2 - y) gives H(f^2) != H(f)^2.
  RingPtr f2 = corpus_ring("f2_unital");
  VRing l2 = loop_ring(loop_ring(VirtualRing::finite(f2)));
  const VarId y = l2->variable(), x = l2->base()->variable();
  const VarId t = fresh_var("t", l2->variables());
  VElem f = loop_factor(x) * loop_factor(y) * VElem::leaf(Poly::constant(f2, *f2->unit()));
  VElem lhs = swap_homotopy(f * f, x, y, t);
  VElem rhs = swap_homotopy(f, x, y, t) * swap_homotopy(f, x, y, t);
  CHECK_FALSE(lhs == rhs);
  CHECK(lhs.eval(t, 1) == rhs.eval(t, 1));
  CHECK(lhs.eval(t, 0) == rhs.eval(t, 0));
}

TEST_CASE("double loop cofactor") {
  RingPtr r = corpus_ring("two_z8");
  const VarId x = var("x"), y = var("y");
  VElem a = term(r, {3}, Monomial::of(x) * Monomial::of(y, 2));
  VElem f = loop_factor(x) * loop_factor(y) * a;
  CHECK(double_loop_cofactor(f, x, y) == a);
  CHECK_THROWS_AS(double_loop_cofactor(loop_factor(x) * a, x, y), MembershipViolation);
}

TEST_CASE("the path ring contracts through p(x) -> p(xy)") {
  Rng rng = rng_for(24);
  for (const RingPtr& r : nonzero_corpus()) {
    CAPTURE(r->label());
    VRing e = path_ring(VirtualRing::finite(r));
    const VarId y = fresh_var("y", e->variables());
    VirtualHom h = path_contraction(e, y);
    auto ps = probes(e, 40, rng, 3);
    HomCheck check = check_hom(h, ps);
    CAPTURE(check.failure);
    CHECK(check.ok);
    for (const VElem& p : ps) {
      CHECK(h(p).eval(y, 0).is_zero());
      CHECK(h(p).eval(y, 1) == p);
    }
  }
}

TEST_CASE("composable path pairs") {
  Rng rng = rng_for(25);
  for (const RingPtr& r : nonzero_corpus()) {
    CAPTURE(r->label());
    PathPairs pp = path_pairs(VirtualRing::finite(r));
    const VarId x = pp.path->variable();
    CHECK(pp.copath->variable() == x);
    for (const VElem& p : probes(pp.ring, 100, rng)) {
      REQUIRE(pp.ring->contains(p));
      CHECK(p.first().eval(x, 1) == p.second().eval(x, 0));
      CHECK(p.second().eval(x, 1).is_zero());
    }
    for (const VirtualHom* f : {&pp.alpha, &pp.beta, &pp.omega}) {
      HomCheck check = check_hom(*f, probes(f->source(), 25, rng));
      CAPTURE(f->name());
      CAPTURE(check.failure);
      CHECK(check.ok);
    }
    VElem bad = VElem::pair(VElem::leaf(Poly::term(r, r->generator(0), Monomial::of(x))), pp.copath->zero());
    CHECK_FALSE(pp.ring->contains(bad));
  }
}

TEST_CASE("finite models of path and loop rings") {
  Rng rng = rng_for(26);
  for (const RingPtr& r : {corpus_ring("sq0_z2"), corpus_ring("f2_unital"), corpus_ring("upper3_z2")}) {
    CAPTURE(r->label());
    VRing b = VirtualRing::finite(r);
    VRing e = path_ring(b);
    FiniteModel me = finite_model(e, 2);
    CHECK(me.ring->size() == saturating_pow(r->size(), 3));
    FiniteModel mb = finite_model(b, 2);
    RingHom d1 = finite_hom(evaluation(e, 1), me, mb);
    CHECK(d1.is_surjective());
    for (int k = 0; k < 100; ++k) {
      VElem p = e->random_element(rng, 5), q = e->random_element(rng, 5);
      REQUIRE(me.encode(p * q) == me.ring->mul(me.encode(p), me.encode(q)));
      REQUIRE(me.encode(p + q) == me.ring->add(me.encode(p), me.encode(q)));
      REQUIRE(me.encode(me.decode(me.encode(p))) == me.encode(p));
    }
    FiniteModel mw = finite_model(loop_ring(b), 2);
    for (const RingElem& a : mw.ring->elements()) CHECK(loop_ring(b)->contains(mw.decode(a)) == true);
  }
}
