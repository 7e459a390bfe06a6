#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hotring/corpus.hpp"
#include "hotring/homs.hpp"
#include "hotring/json_io.hpp"
#include "hotring/triangle.hpp"
#include "support.hpp"

using namespace hotring;
using hotring::testing::rng_for;

TEST_CASE("rings round-trip") {
  for (const RingPtr& r : corpus_rings()) {
    Json j = ring_to_json(*r);
    RingPtr back = ring_from_json(parse_json(j.dump(), "test"));
    CAPTURE(r->label());
    CHECK(same_ring(*r, *back));
    CHECK(back->label() == r->label());
    CHECK(ring_to_json(*back) == j);
  }
}

TEST_CASE("homs, polynomials and certificates round-trip") {
  Rng rng = rng_for(70);
  RingPtr s = corpus_ring("sq0_z2");
  for (const RingPtr& r : corpus_rings()) {
    if (saturating_pow(s->size(), r->rank()) > 4096) continue;
    for (const RingHom& f : enumerate_homs(r, s)) {
      RingHom back = hom_from_json(hom_to_json(f), r, s);
      CHECK(back.images() == f.images());
    }
    const VarId x = var("x"), y = var("y");
    for (int k = 0; k < 20; ++k) {
      Poly p = random_poly(r, {x, y}, 3, 4, rng);
      CHECK(poly_from_json(r, parse_json(poly_to_json(p).dump(), "poly")) == p);
    }
  }
  HomotopyCertificate c = *search_elementary(RingHom::identity(s), RingHom::zero(s, s), 1).certificate;
  HomotopyCertificate back = certificate_from_json(certificate_to_json(c), s, s);
  CHECK(back.images == c.images);
  CHECK(back.var == c.var);
  CHECK(verify_certificate(back).ok);
}

TEST_CASE("diagrams round-trip") {
  Tower t = corpus_tower();
  Diagram d;
  d.rings = {{t.top->label(), t.top}, {t.middle->label(), t.middle}, {t.bottom->label(), t.bottom}};
  d.homs = {{"h", t.h}, {"k", t.k}};
  Json j = diagram_to_json(d);
  Diagram back = diagram_from_json(parse_json(j.dump(), "diagram"));
  CHECK(back.hom("k").images() == t.k.images());
  CHECK(diagram_to_json(back) == j);
  CHECK_THROWS_AS(back.hom("missing"), InvalidInput);

  K0Diagram k{{"A", "OmegaA", "0"}, {{"A", "A"}}, {{"OmegaA", "0", "A"}}};
  CHECK(k0_diagram_to_json(k0_diagram_from_json(k0_diagram_to_json(k))) == k0_diagram_to_json(k));
}

TEST_CASE("malformed input") {
  try {
    parse_json("{\"orders\": [2,", "bad.json");
    FAIL("expected an error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(ring_from_json(parse_json(R"({"orders": [2]})", "r")), InvalidInput);
  CHECK_THROWS_AS(ring_from_json(parse_json(R"({"orders": "two", "mul": []})", "r")), InvalidInput);
  CHECK_THROWS_AS(diagram_from_json(parse_json(R"({"rings": [], "homs": [{"name": "f", "source": "A", "target": "B", "images": []}]})", "d")),
                  InvalidInput);
  RingPtr r = corpus_ring("f2_unital");
  CHECK_THROWS_AS(elem_from_json(*r, parse_json("[1, 0]", "e")), InvalidInput);
}
