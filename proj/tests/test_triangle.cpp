#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hotring/construct.hpp"
#include "hotring/corpus.hpp"
#include "hotring/homs.hpp"
#include "hotring/triangle.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>

using namespace hotring;
using hotring::testing::rng_for;

namespace {

std::vector<RingPtr> nonzero_corpus() {
  std::vector<RingPtr> out;
  for (const RingPtr& r : corpus_rings())
    if (r->rank() > 0) out.push_back(r);
  return out;
}

// Rank over Q by fraction-free elimination on doubles-free integers.
std::size_t rational_rank(IntMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, rank);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == 0) continue;
      BigInt a = m(rank, c), b = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = a * m(r, k) - b * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

// A two-step quotient tower of a ring with nonzero products.
std::pair<RingHom, RingHom> quotient_tower(const RingPtr& r) {
  Quotient q1 = quotient(r, {r->generator(r->rank() - 1)}, "q1");
  const RingPtr& s = q1.ring;
  Quotient q2 = quotient(s, {q1.projection(r->generator(0))}, "q2");
  return {q1.projection, q2.projection};
}

}  // namespace

TEST_CASE("mapping path") {
  Rng rng = rng_for(50);
  for (const RingPtr& b : nonzero_corpus()) {
    for (const RingPtr& c : {corpus_ring("sq0_z2"), corpus_ring("f2_unital")}) {
      auto homs = enumerate_homs(b, c);
      for (std::size_t n = 0; n < std::min<std::size_t>(homs.size(), 3); ++n) {
        MappingPath mp = mapping_path(homs[n]);
        CAPTURE(b->label());
        auto ps = probes(mp.ring, 60, rng);
        for (const VElem& p : ps) {
          REQUIRE(mp.ring->contains(p));
          CHECK(mp.g(mp.g1(p)) == mp.gprime(p).eval(mp.path->variable(), 1));
        }
        for (const VElem& l : probes(mp.loops, 60, rng)) CHECK(mp.g1(mp.j(l)).is_zero());
        for (const VirtualHom* f : {&mp.g1, &mp.gprime, &mp.j, &*mp.composite.h})
          CHECK(check_hom(*f, probes(f->source(), 15, rng)).ok);
      }
    }
  }
}

TEST_CASE("P(id) is contractible, P(0) on a unital ring is not contracted the same way") {
  Rng rng = rng_for(51);
  for (const RingPtr& r : nonzero_corpus()) {
    MappingPath mp = mapping_path(RingHom::identity(r));
    CertificateCheck c = verify_certificate(identity_path_contraction(mp), probes(mp.ring, 100, rng));
    CAPTURE(r->label());
    CAPTURE(c.failure);
    CHECK(c.ok);
  }
  RingPtr f2 = corpus_ring("f2_unital");
  MappingPath z = mapping_path(RingHom::zero(f2, f2));
  CHECK_FALSE(verify_certificate(identity_path_contraction(z), probes(z.ring, 50, rng)).ok);
}

TEST_CASE("Puppe sequence of the square-zero tower") {
  Tower t = corpus_tower();
  CHECK_THROWS_AS(puppe(t.k, 5, 4), DepthExceeded);
  PuppeSequence seq = puppe(t.k, 3);
  REQUIRE(seq.objects.size() == 5);
  REQUIRE(seq.maps.size() == 4);
  auto start = std::chrono::steady_clock::now();
  PuppeReport rep = check_puppe(seq, corpus_ring("sq0_z2"), 2);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("Puppe check at level 2 took " << secs << " s");
  // With d1 onto, |X x_Y E_m Y| = |X| |Y|^(2m-1) / |Y| = |X| |Y|^2 at m = 2.
  std::vector<std::size_t> expect{2, 4};
  for (std::size_t k = 2; k < 5; ++k) expect.push_back(expect[k - 1] * expect[k - 2] * expect[k - 2]);
  CHECK(rep.sizes == expect);
  CAPTURE(rep.first_failure);
  CHECK(rep.ok());
  CHECK(rep.composites_checked == 16 + 256 + 65536);
  CHECK(rep.lifts_checked > 0);
  // Every hom out of a square-zero ring is linearly null-homotopic.
  for (std::size_t k = 0; k < 4; ++k) CHECK(rep.class_counts[k] == 1);
}

TEST_CASE("Puppe on a ring with products") {
  RingPtr r = corpus_ring("upper3_z2");
  auto [h, k] = quotient_tower(r);
  PuppeSequence seq = puppe(h, 1);
  PuppeReport rep = check_puppe(seq, corpus_ring("f2_unital"), 1);
  CAPTURE(rep.first_failure);
  CHECK(rep.composite_failures == 0);
  CHECK(rep.lift_failures == 0);
}

TEST_CASE("standard triangles and rotation") {
  Rng rng = rng_for(52);
  Tower tw = corpus_tower();
  auto [qh, qk] = quotient_tower(corpus_ring("upper3_z2"));
  std::vector<RingHom> maps{tw.h, tw.k, compose(tw.k, tw.h), qh, qk, RingHom::identity(corpus_ring("f3_unital")),
                            RingHom::zero(corpus_ring("f2_unital"), corpus_ring("f2_unital"))};
  for (const RingHom& g : maps) {
    CAPTURE(g.format());
    LeftTriangle t = standard_triangle(g);
    TriangleReport r0 = check_triangle(t, 1000, rng);
    CAPTURE(r0.first_failure);
    CHECK(r0.ok());
    CHECK(t.composites[0].strict());
    LeftTriangle t1 = rotate(t);
    REQUIRE(t1.rotation_square);
    TriangleReport r1 = check_triangle(t1, 200, rng);
    CAPTURE(r1.first_failure);
    CHECK(r1.ok());
    LeftTriangle t2 = rotate(t1);
    TriangleReport r2 = check_triangle(t2, 100, rng);
    CAPTURE(r2.first_failure);
    CHECK(r2.ok());
    CHECK_FALSE(t2.rotation_square);
    // Two rotations apply sigma twice to the loops of B.
    VirtualHom s = sigma(t1.objects[0]);
    for (const VElem& a : probes(t1.objects[0], 200, rng)) CHECK(s(s(a)) == a);
  }
}

TEST_CASE("the rotation square runs from kappa at y = 0 to nu Omega g sigma at y = 1") {
  Rng rng = rng_for(53);
  for (const RingHom& g : {corpus_tower().k, RingHom::identity(corpus_ring("f2_unital"))}) {
    LeftTriangle t1 = rotate(standard_triangle(g));
    const VirtualCertificate& c = *t1.rotation_square;
    auto ps = probes(c.h.source(), 200, rng);
    CHECK(verify_certificate(c, ps).ok);
    VirtualCertificate swapped{c.h, c.f1, c.f0, c.var};
    CHECK_FALSE(verify_certificate(swapped, ps).ok);
  }
}

TEST_CASE("octahedron") {
  SUBCASE("square-zero tower, exhaustive at level 2") {
    Tower t = corpus_tower();
    Octahedron o = octahedron(t.h, t.k);
    CHECK(o.a.ring->size() == 2);
    CHECK(o.f.ring->size() == 4);
    CHECK(o.e.ring->size() == 2);
    OctahedronReport r = check_octahedron(o);
    CAPTURE(r.first_failure);
    CHECK(r.ok());
    CHECK(r.exhaustive);
    Rng rng = rng_for(54);
    for (const LeftTriangle& row : o.rows) CHECK(check_triangle(row, 200, rng).ok());
  }
  SUBCASE("quotients of upper triangular matrices") {
    auto [h, k] = quotient_tower(corpus_ring("upper3_z2"));
    Octahedron o = octahedron(h, k);
    OctahedronReport r = check_octahedron(o);
    CAPTURE(r.first_failure);
    CHECK(r.ok());
  }
  SUBCASE("non-surjective input") {
    RingPtr f2 = corpus_ring("f2_unital");
    CHECK_THROWS_AS(octahedron(RingHom::zero(f2, f2), RingHom::identity(f2)), NotSurjective);
  }
}

TEST_CASE("path factorization") {
  Rng rng = rng_for(55);
  std::size_t checked = 0, total = 0;
  for (const RingPtr& a : corpus_rings())
    for (const RingPtr& b : corpus_rings()) {
      auto homs = enumerate_homs(a, b);
      total += homs.size();
      for (const RingHom& u : homs) {
        if (checked >= 200) break;
        ++checked;
        FactorizationReport r = check_factorization(factorize(u), 40, rng);
        CAPTURE(u.format());
        CAPTURE(r.failure);
        CHECK(r.ok());
      }
    }
  MESSAGE(total << " homs among corpus rings");
  CHECK(checked == std::min<std::size_t>(total, 200));
}

TEST_CASE("path factorization of the zero map is A x EB") {
  Rng rng = rng_for(58);
  {
    RingPtr a = corpus_ring("f3_unital"), b = corpus_ring("two_z8");
    Factorization f = factorize(RingHom::zero(a, b));
    VRing eb = path_ring(f.target);
    const VarId x = f.ring->right()->variable();
    REQUIRE(eb->variable() == x);
    for (const RingElem& e : a->elements())
      for (const VElem& q : probes(eb, 30, rng)) CHECK(f.ring->contains(VElem::pair(f.source->constant(e), q)));
    for (const VElem& p : probes(f.ring, 100, rng)) CHECK(eb->contains(p.second()));
  }
  {
    RingPtr a = corpus_ring("upper3_z2");
    Factorization f = factorize(RingHom::identity(a));
    f.splitting.f0 = VirtualHom::zero(f.ring, f.ring);
    CHECK_FALSE(check_factorization(f, 20, rng).splitting);
  }
}

TEST_CASE("fibration families") {
  Tower t = corpus_tower();
  Diagram d;
  d.rings = {{"top", t.top}, {"middle", t.middle}, {"bottom", t.bottom}};
  d.homs = {{"h", t.h}, {"k", t.k}, {"kh", compose(t.k, t.h)}};
  Rng rng = rng_for(56);
  SUBCASE("surjections satisfy every axiom") {
    for (const AxiomResult& a : check_axioms(FibrationFamily::surjections(d), 30, rng)) {
      CAPTURE(a.axiom);
      CHECK(a.holds);
    }
  }
  SUBCASE("a marked family without maps to 0 fails Ax1 and saturation") {
    auto results = check_axioms(FibrationFamily::of_marked(d, {"h", "k", "kh"}), 30, rng);
    CHECK_FALSE(results[0].holds);
    CHECK(results[0].violations.size() == 3);
    CHECK(results[1].holds);
    CHECK(results[2].holds);
    CHECK_FALSE(results[4].holds);
  }
  SUBCASE("a marked family missing a composite fails Ax2") {
    auto results = check_axioms(FibrationFamily::of_marked(d, {"h", "k"}), 30, rng);
    CHECK_FALSE(results[1].holds);
  }
  SUBCASE("marking a non-surjection is rejected") {
    Diagram e = d;
    e.homs.push_back({"zero", RingHom::zero(t.middle, t.bottom)});
    CHECK_THROWS_AS(FibrationFamily::of_marked(e, {"zero"}), NotSurjective);
  }
  SUBCASE("a non-surjective map breaks pullback stability") {
    Diagram e = d;
    e.homs.push_back({"zero", RingHom::zero(t.middle, t.bottom)});
    auto results = check_axioms(FibrationFamily::surjections(e), 30, rng);
    CHECK(results[2].holds);  // pulling a surjection back along anything stays onto
    CHECK(results[3].holds);
  }
}

TEST_CASE("GL-fibration flag") {
  Tower t = corpus_tower();
  GlFibrationFlag f = gl_fibration(t.k, 2, 1);
  CHECK(f.status == GlFibrationFlag::Status::Verified);
  f = gl_fibration(t.h, 1, 2);
  CHECK(f.status == GlFibrationFlag::Status::Verified);
  RingPtr f2 = corpus_ring("f2_unital");
  CHECK(gl_fibration(RingHom::zero(f2, f2), 1, 1).status == GlFibrationFlag::Status::Counterexample);
  CHECK(gl_fibration(RingHom::identity(f2), 2, 1).status == GlFibrationFlag::Status::Verified);
  CHECK(gl_fibration(RingHom::identity(corpus_ring("upper3_z2")), 3, 3, 16).status ==
        GlFibrationFlag::Status::Unknown);
}

TEST_CASE("K0 presentations") {
  SUBCASE("loop relation") {
    K0Diagram d{{"A", "OmegaA", "0"}, {}, {{"OmegaA", "0", "A"}}};
    K0Presentation p = k0_presentation(d);
    CHECK(p.rank == 1);
    CHECK(p.torsion.empty());
    CHECK(k0_vanishes(p, {1, 1, 0}));
    CHECK(k0_vanishes(p, {0, 0, 1}));
    CHECK_FALSE(k0_vanishes(p, {1, 0, 0}));
    CHECK(p.class_of[1][0] == -p.class_of[0][0]);
  }
  SUBCASE("invariants survive row shuffles and sign flips") {
    Rng rng = rng_for(57);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + rng() % 4, rows = 1 + rng() % 5;
      IntMatrix m(rows, n);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = BigInt(int(rng() % 7) - 3);
      std::vector<std::string> names;
      for (std::size_t c = 0; c < n; ++c) names.push_back("o" + std::to_string(c));
      K0Presentation base = k0_from_relations(m, names);
      CHECK(base.rank == n - rational_rank(m));
      for (int s = 0; s < 10; ++s) {
        IntMatrix shuffled = m;
        for (std::size_t r = rows; r > 1; --r) shuffled.swap_rows(r - 1, rng() % r);
        for (std::size_t r = 0; r < rows; ++r)
          if (rng() % 2) shuffled.negate_row(r);
        K0Presentation p = k0_from_relations(shuffled, names);
        CHECK(p.rank == base.rank);
        CHECK(p.torsion == base.torsion);
      }
      // Every relation vanishes in the group.
      for (std::size_t r = 0; r < rows; ++r) {
        std::vector<BigInt> row;
        for (std::size_t c = 0; c < n; ++c) row.push_back(m(r, c));
        CHECK(k0_vanishes(base, row));
      }
    }
  }
  SUBCASE("torsion") {
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    K0Presentation p = k0_from_relations(m, {"a", "b"});
    CHECK(p.rank == 0);
    CHECK(p.torsion == std::vector<BigInt>{6});
    CHECK(k0_vanishes(p, {2, 0}));
    CHECK_FALSE(k0_vanishes(p, {1, 0}));
  }
  SUBCASE("two fibre sequences sharing a kernel") {
    K0Diagram d{{"K", "A", "B", "C", "D"}, {}, {{"K", "A", "C"}, {"K", "B", "D"}}};
    K0Presentation p = k0_presentation(d);
    CHECK(p.rank == 3);
    // [A] - [C] = [K] = [B] - [D]
    CHECK(k0_vanishes(p, {0, 1, -1, -1, 1}));
  }
  SUBCASE("json round trip and errors") {
    Json j = parse_json(R"({"objects": ["A", "B"], "weq": [["A", "B"]]})", "k0");
    K0Diagram d = k0_diagram_from_json(j);
    CHECK(k0_diagram_to_json(d)["weq"][0][1] == "B");
    CHECK(k0_presentation(d).rank == 1);
    CHECK_THROWS_AS(k0_presentation(K0Diagram{{"A"}, {{"A", "Z"}}, {}}), InvalidInput);
    CHECK_THROWS_AS(k0_diagram_from_json(parse_json(R"({"weq": []})", "k0")), InvalidInput);
  }
}

TEST_CASE("mapping path identifications") {
  Rng rng = rng_for(59);
  RingPtr b = corpus_ring("upper3_z2"), c = corpus_ring("f2_unital");
  SUBCASE("g = id: (p(1), p) <-> p identifies P(g) with EC") {
    MappingPath mp = mapping_path(RingHom::identity(b));
    const VarId x = mp.path->variable();
    for (const VElem& p : probes(mp.path, 200, rng)) CHECK(mp.ring->contains(VElem::pair(p.eval(x, 1), p)));
    for (const VElem& e : probes(mp.ring, 200, rng)) CHECK(e.first() == e.second().eval(x, 1));
  }
  SUBCASE("g = 0: P(g) is B x Omega C") {
    MappingPath mp = mapping_path(RingHom::zero(b, c));
    for (const RingElem& a : b->elements())
      for (const VElem& l : probes(mp.loops, 20, rng))
        CHECK(mp.ring->contains(VElem::pair(mp.g.source()->constant(a), l)));
    for (const VElem& e : probes(mp.ring, 200, rng)) CHECK(mp.loops->contains(e.second()));
  }
  SUBCASE("(b, g(b) x) lies in P(g)") {
    for (const RingHom& g : enumerate_homs(b, c)) {
      MappingPath mp = mapping_path(g);
      const VarId x = mp.path->variable();
      for (const RingElem& a : b->elements())
        CHECK(mp.ring->contains(
            VElem::pair(mp.g.source()->constant(a), VElem::leaf(Poly::term(c, g(a), Monomial::of(x))))));
    }
  }
}

TEST_CASE("g1 o g2 is null-homotopic but not zero") {
  Rng rng = rng_for(60);
  PuppeSequence seq = puppe(corpus_tower().k, 2);
  VirtualHom composite = compose(seq.maps[1], seq.maps[2]);
  bool nonzero = false;
  for (const VElem& e : probes(seq.objects[3], 200, rng)) nonzero = nonzero || !composite(e).is_zero();
  CHECK(nonzero);
  const NullHomotopy& n = seq.stages[1].composite;
  for (const VElem& e : probes(seq.objects[3], 200, rng)) {
    VElem h = (*n.h)(e);
    CHECK(h.eval(n.var, 0).is_zero());
    CHECK(h.eval(n.var, 1) == composite(e));
  }
}

TEST_CASE("octahedron degenerate rows") {
  Tower t = corpus_tower();
  SUBCASE("k = id: E = 0 and alpha is an isomorphism") {
    Octahedron o = octahedron(t.h, RingHom::identity(t.middle));
    CHECK(o.e.ring->size() == 1);
    CHECK(o.alpha.is_injective());
    CHECK(o.alpha.is_surjective());
    CHECK(check_octahedron(o).ok());
  }
  SUBCASE("h = id: A = 0 and beta is an isomorphism") {
    Octahedron o = octahedron(RingHom::identity(t.top), t.h);
    CHECK(o.a.ring->size() == 1);
    CHECK(o.beta.is_injective());
    CHECK(o.beta.is_surjective());
    CHECK(check_octahedron(o).ok());
  }
}

TEST_CASE("pullback surjectivity agrees with image enumeration on corpus pullbacks") {
  std::size_t squares = 0;
  for (const RingPtr& c : corpus_rings()) {
    if (c->size() > 8) continue;
    std::vector<RingHom> into;
    for (const RingPtr& a : corpus_rings())
      if (saturating_pow(c->size(), a->rank()) <= 512)
        for (const RingHom& f : enumerate_homs(a, c)) into.push_back(f);
    for (const RingHom& f : into)
      for (const RingHom& g : into) {
        if (saturating_pow(f.source()->size(), 1) * g.source()->size() > 256) continue;
        Pullback pb = pullback(f, g);
        bool brute = true;
        for (const RingElem& y : g.source()->elements()) {
          bool hit = false;
          for (const RingElem& x : f.source()->elements()) hit = hit || f(x) == g(y);
          brute = brute && hit;
        }
        CHECK(pb.sigma.is_surjective() == brute);
        ++squares;
      }
  }
  MESSAGE(squares << " pullback squares");
  CHECK(squares > 100);
}
