#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hotring/construct.hpp"
#include "hotring/corpus.hpp"
#include "hotring/homs.hpp"
#include "hotring/glk.hpp"
#include "support.hpp"

#include <set>

using namespace hotring;
using hotring::testing::rng_for;

namespace {

Matrix constant_matrix(const RingPtr& r, std::size_t n, const std::vector<std::vector<Coord>>& entries) {
  std::vector<RingElem> elems;
  for (const auto& e : entries) elems.push_back(r->reduce(e));
  return Matrix::from_elements(r, n, elems);
}

// |GL_n(F_p)| by the classical product formula.
std::uint64_t gl_order(std::uint64_t p, unsigned n) {
  std::uint64_t pn = 1, out = 1;
  for (unsigned i = 0; i < n; ++i) pn *= p;
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < n; ++i) {
    out *= pn - pi;
    pi *= p;
  }
  return out;
}

}  // namespace

TEST_CASE("quasi-inverse examples") {
  SUBCASE("square-zero base: N = -M") {
    RingPtr r = corpus_ring("sq0_z3");
    Matrix m = constant_matrix(r, 2, {{1}, {2}, {0}, {1}});
    QiResult q = quasi_inverse(m);
    REQUIRE(q.status == QiResult::Status::Found);
    CHECK(*q.witness == -m);
  }
  SUBCASE("zero matrix") {
    RingPtr r = corpus_ring("f3_unital");
    Matrix m(r, 3);
    QiResult q = quasi_inverse(m);
    REQUIRE(q.status == QiResult::Status::Found);
    CHECK(q.witness->is_zero());
  }
  SUBCASE("unital Z/3 against a classical inverse") {
    RingPtr r = corpus_ring("f3_unital");
    // I + M = [[2, 1], [1, 1]], inverse [[1, 2], [2, 2]] over F_3, so N = [[0, 2], [2, 1]].
    Matrix m = constant_matrix(r, 2, {{1}, {1}, {1}, {0}});
    QiResult q = quasi_inverse(m);
    REQUIRE(q.status == QiResult::Status::Found);
    CHECK(*q.witness == constant_matrix(r, 2, {{0}, {2}, {2}, {1}}));
    // I + M singular.
    Matrix s = constant_matrix(r, 2, {{0}, {1}, {1}, {0}});
    CHECK(quasi_inverse(s).status == QiResult::Status::NotQuasiInvertible);
  }
  SUBCASE("polynomial entries over a unital base") {
    RingPtr r = corpus_ring("f3_unital");
    const VarId t = var("t");
    Matrix p(r, 2);
    p(0, 1) = Poly::term(r, *r->unit(), Monomial::of(t));  // elementary e12(t)
    QiResult q = quasi_inverse(p);
    REQUIRE(q.status == QiResult::Status::Found);
    CHECK(witness_holds(QiMatrix{p, *q.witness}));
    Matrix d(r, 2);
    d(0, 0) = Poly::term(r, *r->unit(), Monomial::of(t));  // det(I + M) = 1 + t
    CHECK(quasi_inverse(d).status == QiResult::Status::NotQuasiInvertible);
  }
  SUBCASE("unital Z/4: nilpotent entries along a path") {
    RingPtr r = corpus_ring("z4_unital");
    const VarId t = var("t");
    Matrix p(r, 1);
    p(0, 0) = Poly::term(r, r->reduce(std::vector<Coord>{2}), Monomial::of(t));  // 1 + 2t is a unit
    QiResult q = quasi_inverse(p);
    REQUIRE(q.status == QiResult::Status::Found);
    CHECK(witness_holds(QiMatrix{p, *q.witness}));
  }
}

TEST_CASE("witness identities hold for random matrices over every corpus ring") {
  Rng rng = rng_for(40);
  for (const RingPtr& r : corpus_rings()) {
    for (int k = 0; k < 100; ++k) {
      const std::size_t n = 1 + rng() % 3;
      std::vector<RingElem> entries;
      for (std::size_t i = 0; i < n * n; ++i) entries.push_back(r->random_element(rng));
      Matrix m = Matrix::from_elements(r, n, entries);
      QiResult q = quasi_inverse(m);
      CAPTURE(r->label());
      REQUIRE(q.status != QiResult::Status::Unknown);
      if (q.status == QiResult::Status::Found) {
        CHECK(circle(m, *q.witness).is_zero());
        CHECK(circle(*q.witness, m).is_zero());
      }
    }
  }
}

TEST_CASE("GL groups") {
  SUBCASE("square-zero Z/2, n = 1 is (A, +)") {
    GlGroup g = gl_group(corpus_ring("sq0_z2"), 1);
    CHECK(g.order() == 2);
    CHECK(g.mul(1, 1) == 0);
  }
  SUBCASE("zero ring") { CHECK(gl_group(zero_ring(), 2).order() == 1); }
  SUBCASE("unital Z/3, n = 1") {
    RingPtr r = corpus_ring("f3_unital");
    GlGroup g = gl_group(r, 1);
    REQUIRE(g.order() == 2);
    std::set<RingElem> elems;
    for (const Matrix& m : g.elements) elems.insert(m.constants()[0]);
    CHECK(elems == std::set<RingElem>{r->zero(), *r->unit()});
  }
  SUBCASE("orders match the classical formula over prime fields") {
    CHECK(gl_group(corpus_ring("f2_unital"), 2).order() == gl_order(2, 2));
    CHECK(gl_group(corpus_ring("f3_unital"), 2).order() == gl_order(3, 2));
    CHECK(gl_group(corpus_ring("f2_unital"), 3).order() == gl_order(2, 3));
  }
  SUBCASE("nilpotent rings: every matrix is quasi-invertible") {
    for (const std::string& label : {"sq0_z2", "sq0_z3", "two_z8"}) {
      RingPtr r = corpus_ring(label);
      GlGroup g = gl_group(r, 2);
      CHECK(g.order() == saturating_pow(r->size(), 4));
    }
  }
  SUBCASE("group axioms on full tables") {
    for (const std::string& label : {"sq0_z2", "f2_unital", "f3_unital", "z4_unital"}) {
      GlGroup g = gl_group(corpus_ring(label), label == std::string("z4_unital") ? 1 : 2);
      GroupAxioms ax = check_group_axioms(g, 1u << 24);
      CAPTURE(label);
      CHECK(ax.ok());
      CHECK(ax.exhaustive);
    }
  }
  SUBCASE("budget") { CHECK_THROWS_AS(gl_group(corpus_ring("upper3_z2"), 3, 1000), BudgetExceeded); }
}

TEST_CASE("KV1 at level (2, 1)") {
  SUBCASE("unital Z/3 has order 2, certified by the determinant") {
    Pi0Presentation p = kv1_approx(corpus_ring("f3_unital"), 2, 1);
    CHECK(p.group_order == 48);
    CHECK(p.subgroup_order == 24);
    CHECK(p.order == 2);
    CHECK(p.normal);
    CHECK(p.abelian);
    REQUIRE(p.invariant_factors.size() == 1);
    CHECK(p.invariant_factors[0] == 2);
    CHECK(p.determinant.applicable);
    CHECK(p.determinant.image_order == 2);
    CHECK(p.determinant.exact);
  }
  SUBCASE("unital Z/2 is trivial") {
    Pi0Presentation p = kv1_approx(corpus_ring("f2_unital"), 2, 1);
    CHECK(p.order == 1);
    CHECK(p.invariant_factors.empty());
    CHECK(p.determinant.exact);
  }
  SUBCASE("square-zero rings are trivial and monotone in d") {
    for (const std::string& label : {"sq0_z2", "sq0_z3"}) {
      Pi0Presentation p = kv1_approx(corpus_ring(label), 2, 2);
      CHECK(p.order == 1);
      CHECK(p.monotone);
      CHECK(p.monotone_history == std::vector<std::size_t>{1, 1});
    }
  }
  SUBCASE("elementary matrices fall in the identity class") {
    RingPtr r = corpus_ring("f3_unital");
    Pi0Presentation p = kv1_approx(r, 2, 1);
    GlGroup g = gl_group(r, 2);
    for (const RingElem& a : r->elements()) {
      Matrix e(r, 2);
      e(0, 1) = Poly::constant(r, a);
      CHECK(p.class_of[g.id_of(e)] == p.class_of[0]);
    }
  }
  SUBCASE("the class map is constant on cosets") {
    RingPtr r = corpus_ring("f3_unital");
    Pi0Presentation p = kv1_approx(r, 2, 1);
    GlGroup g = gl_group(r, 2);
    std::set<std::size_t> h(p.subgroup.begin(), p.subgroup.end());
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y) {
        bool same_coset = h.count(g.mul(g.inverse[x], y)) > 0;
        CHECK(same_coset == (p.class_of[x] == p.class_of[y]));
      }
  }
}

TEST_CASE("stabilization") {
  StabilizationCheck s = check_stabilization(corpus_ring("f2_unital"), 1, 1);
  CHECK(s.homomorphism);
  CHECK(s.preserves_relation);
  CHECK(s.classes_n1 <= s.classes_n);
  StabilizationCheck z = check_stabilization(corpus_ring("sq0_z2"), 1, 1);
  CHECK(z.homomorphism);
  CHECK(z.preserves_relation);
}

TEST_CASE("strict pi0") {
  CHECK(strict_pi0(3, {}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(strict_pi0(3, {{0, 1}, {1, 2}}) == std::vector<std::size_t>{0, 0, 0});
  CHECK_THROWS_AS(strict_pi0(2, {{0, 2}}), IndexOutOfRange);
  // GL_1 of square-zero Z/2 with the edge from P(t) = g t.
  GlGroup g = gl_group(corpus_ring("sq0_z2"), 1);
  CHECK(strict_pi0(g.order(), {{0, 1}}) == std::vector<std::size_t>{0, 0});
}

TEST_CASE("determinant") {
  RingPtr r = corpus_ring("f3_unital");
  Matrix m = constant_matrix(r, 3, {{1}, {2}, {0}, {0}, {1}, {1}, {2}, {0}, {1}});
  // 1*(1*1 - 1*0) - 2*(0*1 - 1*2) + 0 = 1 + 4 = 5 = 2 mod 3
  CHECK(determinant(m).constant_term() == r->reduce(std::vector<Coord>{2}));
}
