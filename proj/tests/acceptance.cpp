// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "hotring/checks.hpp"
#include "hotring/corpus.hpp"
#include "hotring/glk.hpp"
#include "hotring/homotopy.hpp"
#include "hotring/homs.hpp"
#include "hotring/json_io.hpp"
#include "hotring/loops.hpp"
#include "hotring/triangle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace hotring;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

class Notes {
 public:
  void fail(const std::string& what) {
    pass_ = false;
    if (fails_.empty()) fails_ = what;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  std::ostringstream& info() { return info_; }
  Verdict verdict() const { return {pass_, pass_ ? info_.str() : fails_}; }

 private:
  bool pass_ = true;
  std::string fails_;
  std::ostringstream info_;
};

std::vector<RingPtr> nonzero_corpus() {
  std::vector<RingPtr> out;
  for (const RingPtr& r : corpus_rings())
    if (r->rank() > 0) out.push_back(r);
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict ac1() {
  Notes n;
  Rng rng(101);
  auto t0 = std::chrono::steady_clock::now();
  std::uint64_t probes = 0;
  for (const RingPtr& r : corpus_rings()) {
    SimplicialReport rep = simplicial_identities(r, 4, 1000, rng);
    for (const IdentityTally& t : rep.families) {
      probes += t.probes;
      n.check(t.failures == 0, r->label() + ": " + t.family + ": " + t.first_failure);
    }
    n.check(rep.families.size() == 5, r->label() + ": expected five identity families");
  }
  double s = seconds_since(t0);
  n.check(s < 60, "runtime " + std::to_string(s) + " s");
  n.info() << probes << " probes over " << corpus_rings().size() << " rings, " << s << " s";
  return n.verdict();
}

Verdict ac2() {
  Notes n;
  Rng rng(102);
  std::uint64_t probes = 0;
  for (const RingPtr& r : corpus_rings()) {
    SimplicialReport rep = vertex_homotopies(r, 3, 200, rng);
    for (const IdentityTally& t : rep.families) {
      probes += t.probes;
      n.check(t.failures == 0, r->label() + ": " + t.family + ": " + t.first_failure);
    }
  }
  n.info() << probes << " probes, zero failures";
  return n.verdict();
}

Verdict ac3() {
  Notes n;
  Rng rng(103);
  for (const RingPtr& r : nonzero_corpus()) {
    VRing e = path_ring(VirtualRing::finite(r));
    const VarId y = fresh_var("y", e->variables());
    VirtualHom h = path_contraction(e, y);
    auto ps = probes(e, 60, rng, 3);
    HomCheck hc = check_hom(h, ps);
    n.check(hc.ok, r->label() + ": " + hc.failure);
    for (const VElem& p : ps) {
      n.check(h(p).eval(y, 0).is_zero(), r->label() + ": y = 0 endpoint");
      n.check(h(p).eval(y, 1) == p, r->label() + ": y = 1 endpoint");
    }
  }
  RingPtr s = corpus_ring("sq0_z2");
  SearchResult found = search_elementary(RingHom::identity(s), RingHom::zero(s, s), 1);
  n.check(found.certificate && verify_certificate(*found.certificate).ok, "no verified id ~ 0 on sq0_z2 at degree 1");
  n.info() << nonzero_corpus().size() << " path rings contract (the zero ring has EZ = 0); search found id ~ 0 on sq0_z2 after "
           << found.searched << " candidates";
  return n.verdict();
}

Verdict ac4() {
  Notes n;
  auto timed = [&](const std::string& label, unsigned d) {
    auto t0 = std::chrono::steady_clock::now();
    Pi0Presentation p = kv1_approx(corpus_ring(label), 2, d);
    double s = seconds_since(t0);
    n.check(s < 300, label + ": " + std::to_string(s) + " s");
    return p;
  };
  for (const std::string& label : {"sq0_z2", "sq0_z3", "two_z8"}) {
    Pi0Presentation p = timed(label, 1);
    n.check(p.order == 1, label + ": order " + std::to_string(p.order));
  }
  for (const std::string& label : {"sq0_z2", "sq0_z3"}) {
    Pi0Presentation p = timed(label, 2);
    n.check(p.monotone && p.monotone_history.size() == 2 && p.monotone_history[1] <= p.monotone_history[0],
            label + ": class counts not monotone in d");
  }
  Pi0Presentation f2 = timed("f2_unital", 1);
  n.check(f2.order == 1, "f2_unital: order " + std::to_string(f2.order));
  Pi0Presentation f3 = timed("f3_unital", 1);
  n.check(f3.order == 2, "f3_unital: order " + std::to_string(f3.order));
  n.check(f3.determinant.applicable && f3.determinant.exact && f3.determinant.image_order == 2,
          "f3_unital: determinant certificate does not match");
  n.info() << "square-zero trivial, F2 trivial, F3 order " << f3.order << " = |det image| " << f3.determinant.image_order;
  return n.verdict();
}

Verdict ac5() {
  Notes n;
  Rng rng(105);
  std::size_t checked = 0;
  for (const RingPtr& a : corpus_rings())
    for (const RingPtr& b : corpus_rings()) {
      if (checked >= 200) break;
      for (const RingHom& u : enumerate_homs(a, b)) {
        if (checked >= 200) break;
        FactorizationReport r = check_factorization(factorize(u), 30, rng);
        n.check(r.ok(), a->label() + " -> " + b->label() + ": " + r.failure);
        ++checked;
      }
    }
  n.info() << checked << " homs (every hom between corpus rings), zero failures";
  return n.verdict();
}

Verdict ac6() {
  Notes n;
  PuppeReport r = check_puppe(puppe(corpus_tower().k, 3), corpus_ring("sq0_z2"), 2);
  n.check(r.composites_checked > 0 && r.composite_failures == 0, "composites: " + r.first_failure);
  n.check(r.lift_failures == 0 && r.class_exact, "exactness: " + r.first_failure);
  n.info() << r.composites_checked << " composite evaluations, " << r.lifts_checked << " lifts, level " << r.level;
  return n.verdict();
}

Verdict ac7() {
  Notes n;
  Tower t = corpus_tower();
  OctahedronReport r = check_octahedron(octahedron(t.h, t.k));
  n.check(r.column_exact, "column A -> F -> E not exact");
  n.check(r.failures == 0, r.first_failure);
  n.check(r.exhaustive, "probes were not exhaustive");
  n.info() << r.probes << " probes (every element of the level-2 models)";
  return n.verdict();
}

Verdict ac8() {
  Notes n;
  Rng rng(108);
  std::uint64_t count = 0;
  for (const RingPtr& r : nonzero_corpus()) {
    VRing w = loop_ring(VirtualRing::finite(r));
    VirtualHom s = sigma(w);
    for (const VElem& p : probes(w, 1000, rng, 4)) n.check(s(s(p)) == p, r->label() + ": sigma^2 != id"), ++count;
    VRing l2 = loop_ring(w);
    VirtualHom tw = tau(l2);
    for (const VElem& p : probes(l2, 1000, rng, 3)) n.check(tw(tw(p)) == p, r->label() + ": tau^2 != id"), ++count;
    const VarId tv = fresh_var("t", l2->variables());
    VirtualHom h = swap_homotopy_map(l2, tv);
    for (const VElem& p : probes(l2, 100, rng, 3)) {
      VElem hp = h(p);
      n.check(hp.eval(tv, 0) == tw(p), r->label() + ": swap homotopy at t = 0 is not tau");
      n.check(hp.eval(tv, 1) == p, r->label() + ": swap homotopy at t = 1 is not id");
    }
  }
  n.info() << count << " involution probes, swap endpoints exact";
  return n.verdict();
}

Verdict ac9() {
  Notes n;
  K0Diagram d{{"A", "OmegaA", "0"}, {}, {{"OmegaA", "0", "A"}}};
  K0Presentation p = k0_presentation(d);
  n.check(p.rank == 1 && p.torsion.empty(), "loop diagram is not Z");
  n.check(k0_vanishes(p, {1, 1, 0}), "[OmegaA] + [A] != 0");
  n.check(!k0_vanishes(p, {1, 0, 0}), "[A] = 0");
  Rng rng(109);
  for (int shuffle = 0; shuffle < 10; ++shuffle) {
    std::vector<std::size_t> order(p.relations.rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    IntMatrix m(p.relations.rows(), p.relations.cols());
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = p.relations(order[i], c);
    K0Presentation q = k0_from_relations(m, p.objects);
    n.check(q.rank == p.rank && q.torsion == p.torsion, "shuffle changed the group");
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (int c = -2; c <= 2; ++c)
          n.check(k0_vanishes(q, {a, b, c}) == k0_vanishes(p, {a, b, c}), "shuffle changed the relation lattice");
  }
  n.info() << "rank " << p.rank << ", [OmegaA] = " << p.class_of[1][0] << ", [A] = " << p.class_of[0][0]
           << ", stable under 10 row shuffles";
  return n.verdict();
}

Verdict ac10() {
  Notes n;
  std::size_t runs = 0, merges = 0, chains = 0;
  for (const RingPtr& a : corpus_rings())
    for (const RingPtr& b : corpus_rings()) {
      if (saturating_pow(b->size(), a->rank()) > 256) continue;
      for (unsigned d = 1; d <= 2; ++d) {
        HomotopyClasses c = homotopy_classes(a, b, d);
        ++runs;
        const std::string tag = a->label() + " -> " + b->label();
        for (const Merge& m : c.merges) {
          // Re-verify the stored form of each certificate.
          HomotopyCertificate back = certificate_from_json(parse_json(certificate_to_json(m.certificate).dump(), tag), a, b);
          n.check(verify_certificate(back).ok && back.f0.images() == c.homs[m.from].images() &&
                      back.f1.images() == c.homs[m.to].images(),
                  tag + ": merge does not re-verify");
          ++merges;
        }
        for (std::size_t i = 0; i < c.homs.size(); ++i)
          for (std::size_t j = 0; j < i; ++j) {
            if (c.label[i] != c.label[j]) continue;
            auto chain = c.chain(i, j);
            n.check(chain && verify_chain(*chain, c.homs[i], c.homs[j]).ok, tag + ": chain does not re-verify");
            ++chains;
          }
      }
    }
  RingPtr f2 = corpus_ring("f2_unital");
  for (unsigned d = 1; d <= 3; ++d)
    n.check(homotopy_classes(f2, f2, d).class_count == 2, "f2_unital: class count at d = " + std::to_string(d));
  n.info() << runs << " classes runs, " << merges << " merges and " << chains << " chains re-verified; f2_unital has 2 classes at d = 1..3";
  return n.verdict();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("%s %s (%.2f s) %s\n", name.c_str(), v.pass ? "PASS" : "FAIL", seconds_since(t0), v.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
