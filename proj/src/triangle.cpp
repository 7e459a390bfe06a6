#include "hotring/triangle.hpp"

#include "hotring/glk.hpp"
#include "hotring/homs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hotring {

namespace {

IntPoly v_(VarId v) { return IntPoly::variable(v); }

std::set<VarId> all_vars(std::initializer_list<VRing> rings) {
  std::set<VarId> out;
  for (const VRing& r : rings) {
    auto vs = r->variables();
    out.insert(vs.begin(), vs.end());
  }
  return out;
}

VirtualHom renamed(const VirtualHom& f, std::string name) {
  VirtualHom fc = f;
  return VirtualHom(f.source(), f.target(), [fc](const VElem& a) { return fc(a); }, std::move(name));
}

VRing finite_of(const RingPtr& r) { return VirtualRing::finite(r); }

// Checks a null-homotopy of `composite` at a: membership, y = 0 and y = 1.
std::string check_null(const NullHomotopy& n, const VirtualHom& composite, const VElem& a) {
  VElem c = composite(a);
  if (n.strict()) return c.is_zero() ? "" : composite.name() + " is not zero at " + a.format();
  VElem h = (*n.h)(a);
  if (auto why = n.h->target()->membership_defect(h)) return "homotopy leaves its target: " + *why;
  if (!h.eval(n.var, 0).is_zero()) return "homotopy does not start at 0 for " + a.format();
  if (!(h.eval(n.var, 1) == c)) return "homotopy does not end at " + composite.name() + " for " + a.format();
  return "";
}

// Omega of a null-homotopy H: X -> Z[y], as Omega X -> (Omega Z)[y].
NullHomotopy loop_null(const NullHomotopy& n, const VRing& loop_source, const VRing& loop_target) {
  if (n.strict()) return n;
  const VarId xs = loop_source->variable(), xt = loop_target->variable();
  VirtualHom h = *n.h;
  VRing target = polynomial_ring(loop_target, n.var);
  return NullHomotopy{VirtualHom(
                          loop_source, target, [h, xs, xt](const VElem& a) { return h(a).rename(xs, xt); },
                          "Omega(" + h.name() + ")"),
                      n.var};
}

}  // namespace

// ---------------------------------------------------------------- mapping path

MappingPath mapping_path(const VirtualHom& g, const std::string& label) {
  const VRing x = g.source(), y = g.target();
  const VRing path = path_ring(y);
  const VarId v = path->variable();
  const VRing loops = VirtualRing::poly(y, v, true, true);
  VirtualHom gc = g;
  Sampler sample = [x, path, gc, v](Rng& rng, unsigned degree) {
    VElem a = x->random_element(rng, degree);
    VElem e = path->random_element(rng, degree);
    VElem p = e - v_(v) * e.eval(v, 1) + v_(v) * gc(a);
    return VElem::pair(std::move(a), std::move(p));
  };
  const VRing ring = VirtualRing::pullback(g, evaluation(path, 1), sample, label.empty() ? "P(" + g.name() + ")" : label);
  const VElem xzero = x->zero();
  VirtualHom j(loops, ring, [xzero](const VElem& c) { return VElem::pair(xzero, c); }, "j");
  const VarId yv = fresh_var("y", ring->variables());
  VirtualHom h(
      ring, polynomial_ring(y, yv), [v, yv](const VElem& e) { return e.second().rename(v, yv); }, "(x, p) -> p(y)");
  return MappingPath{g,
                     ring,
                     path,
                     loops,
                     renamed(project_left(ring), "g1"),
                     renamed(project_right(ring), "g'"),
                     j,
                     NullHomotopy{h, yv}};
}

MappingPath mapping_path(const RingHom& g) {
  VirtualHom gv = VirtualHom::from_ring_hom(g, finite_of(g.source()), finite_of(g.target()));
  return mapping_path(renamed(gv, "g"), "P(g)");
}

VirtualCertificate identity_path_contraction(const MappingPath& p) {
  const VarId v = p.path->variable();
  const VarId y = fresh_var("y", p.ring->variables());
  VirtualHom h(
      p.ring, polynomial_ring(p.ring, y),
      [v, y](const VElem& e) {
        const VElem& q = e.second();
        return VElem::pair(q.rename(v, y), q.substitute({{v, v_(v) * v_(y)}}));
      },
      "(c, p) -> (p(y), p(xy))");
  return VirtualCertificate{h, VirtualHom::zero(p.ring, p.ring), VirtualHom::identity(p.ring), y};
}

// ---------------------------------------------------------------- Puppe

PuppeSequence puppe(const RingHom& g, int length, int depth_cap) {
  if (length < 0) throw InvalidInput("Puppe length must be non-negative");
  if (length > depth_cap)
    throw DepthExceeded("Puppe length " + std::to_string(length) + " exceeds the depth cap " + std::to_string(depth_cap));
  PuppeSequence out;
  out.objects = {finite_of(g.target()), finite_of(g.source())};
  out.maps.push_back(renamed(VirtualHom::from_ring_hom(g, out.objects[1], out.objects[0]), "g"));
  for (int k = 0; k < length; ++k) {
    std::string name = k == 0 ? "P(g)" : "P(g" + std::to_string(k) + ")";
    MappingPath stage = mapping_path(out.maps[std::size_t(k)], name);
    out.objects.push_back(stage.ring);
    out.maps.push_back(renamed(stage.g1, "g" + std::to_string(k + 1)));
    out.stages.push_back(std::move(stage));
  }
  return out;
}

namespace {

std::size_t hom_index(const HomotopyClasses& c, const RingHom& f) {
  auto it = std::lower_bound(c.homs.begin(), c.homs.end(), f);
  if (it == c.homs.end() || it->images() != f.images()) throw VerificationFailure("hom missing from enumeration");
  return std::size_t(it - c.homs.begin());
}

}  // namespace

PuppeReport check_puppe(const PuppeSequence& seq, const RingPtr& test_ring, int level) {
  constexpr std::size_t class_cap = 4096;
  PuppeReport out;
  out.level = level;
  auto note = [&](const std::string& why) {
    if (out.first_failure.empty()) out.first_failure = why;
  };

  std::vector<FiniteModel> models;
  for (const VRing& o : seq.objects) {
    models.push_back(finite_model(o, level));
    out.sizes.push_back(models.back().ring->size());
  }
  std::vector<RingHom> fmaps;
  for (std::size_t k = 0; k < seq.maps.size(); ++k) fmaps.push_back(finite_hom(seq.maps[k], models[k + 1], models[k]));

  // maps[k] o maps[k+1] ~ 0 on every element of the reduced source.
  for (std::size_t k = 0; k < seq.stages.size() && k + 1 < seq.maps.size(); ++k) {
    const NullHomotopy& n = seq.stages[k].composite;
    VirtualHom composite = compose(seq.maps[k], seq.maps[k + 1]);
    std::vector<VElem> gens{seq.objects[k + 2]->zero()};
    for (std::size_t i = 0; i < models[k + 2].ring->rank(); ++i)
      gens.push_back(models[k + 2].decode(models[k + 2].ring->generator(i)));
    HomCheck hc = check_hom(*n.h, gens, gens.size());
    if (!hc.ok) {
      ++out.composite_failures;
      note("null-homotopy at stage " + std::to_string(k) + ": " + hc.failure);
    }
    for (const RingElem& e : models[k + 2].ring->elements()) {
      ++out.composites_checked;
      std::string why = check_null(n, composite, models[k + 2].decode(e));
      if (!why.empty()) {
        ++out.composite_failures;
        note(why);
      }
    }
  }

  // A map T -> objects[k+1] killed by maps[k] lifts to (phi, 0) in objects[k+2].
  for (std::size_t k = 0; k < seq.stages.size(); ++k) {
    const FiniteModel& here = models[k + 1];
    const FiniteModel& above = models[k + 2];
    const VElem path_zero = seq.stages[k].path->zero();
    for (const RingHom& phi : enumerate_homs(test_ring, here.ring)) {
      if (!(compose(fmaps[k], phi).images() == RingHom::zero(test_ring, models[k].ring).images())) continue;
      ++out.lifts_checked;
      try {
        std::vector<RingElem> images;
        for (const RingElem& im : phi.images()) images.push_back(above.encode(VElem::pair(here.decode(im), path_zero)));
        RingHom lift(test_ring, above.ring, images);
        if (compose(fmaps[k + 1], lift).images() != phi.images()) throw VerificationFailure("lift does not cover");
      } catch (const Error& err) {
        ++out.lift_failures;
        note("lift at stage " + std::to_string(k) + ": " + err.what());
      }
    }
  }

  // Class-level exactness on the objects small enough to partition.
  std::vector<std::optional<HomotopyClasses>> classes;
  for (const FiniteModel& m : models) {
    if (m.ring->size() > class_cap) {
      classes.emplace_back();
      out.class_counts.push_back(0);
      continue;
    }
    classes.push_back(homotopy_classes(test_ring, m.ring, 1));
    out.class_counts.push_back(classes.back()->class_count);
  }
  for (std::size_t k = 0; k + 2 < models.size(); ++k) {
    if (!classes[k] || !classes[k + 1] || !classes[k + 2]) continue;
    const HomotopyClasses &low = *classes[k], &mid = *classes[k + 1], &high = *classes[k + 2];
    const std::size_t base = low.label[hom_index(low, RingHom::zero(test_ring, models[k].ring))];
    std::set<std::size_t> image, kernel;
    for (const RingHom& phi : high.homs) image.insert(mid.label[hom_index(mid, compose(fmaps[k + 1], phi))]);
    for (std::size_t i = 0; i < mid.homs.size(); ++i)
      if (low.label[hom_index(low, compose(fmaps[k], mid.homs[i]))] == base) kernel.insert(mid.label[i]);
    if (image != kernel) {
      out.class_exact = false;
      note("classes not exact at object " + std::to_string(k + 1));
    }
  }
  return out;
}

// ---------------------------------------------------------------- triangles

LeftTriangle standard_triangle(const RingHom& g) {
  MappingPath mp = mapping_path(g);
  LeftTriangle t;
  t.objects = {mp.loops, mp.ring, mp.g.source(), mp.g.target()};
  t.maps = {mp.j, mp.g1, mp.g};
  t.composites = {NullHomotopy{}, mp.composite};
  t.provenance = "standard(" + g.format() + ")";
  return t;
}

LeftTriangle rotate(const LeftTriangle& t) {
  const VRing& b = t.objects[2];
  const VRing& loop_c = t.objects[0];
  const VRing lb = VirtualRing::poly(b, fresh_var("x", all_vars({b, t.objects[3], loop_c})), true, true,
                                     "Omega(" + b->label() + ")");
  const VarId u = lb->variable();
  VirtualHom neg = renamed(compose(loop_map(t.maps[2], lb, loop_c), sigma(lb)), "-Omega(" + t.maps[2].name() + ")");

  LeftTriangle out;
  out.objects = {lb, t.objects[0], t.objects[1], t.objects[2]};
  out.maps = {neg, t.maps[0], t.maps[1]};
  out.pending = t.composites[1];
  out.rotations = t.rotations + 1;
  out.provenance = t.provenance + " rotated";

  NullHomotopy first;
  if (t.rotations == 0) {
    // a |-> (a(1 - y), g(a(1 - xy))) in P(g)[y].
    const VRing& pg = t.objects[1];
    const VarId v = pg->right()->variable();
    const VarId y = fresh_var("y", all_vars({lb, pg}));
    VirtualHom g = t.maps[2];
    first = NullHomotopy{VirtualHom(
                             lb, polynomial_ring(pg, y),
                             [g, u, v, y](const VElem& a) {
                               return VElem::pair(a.substitute({{u, IntPoly(1) - v_(y)}}),
                                                  g(a).substitute({{u, IntPoly(1) - v_(v) * v_(y)}}));
                             },
                             "rotation null-homotopy"),
                         y};

    // kappa ~ nu o Omega g o sigma in P(g1) = P(g) x_B EB.
    MappingPath p1 = mapping_path(t.maps[1], "P(g1)");
    const VarId w = p1.path->variable();
    const VarId y2 = fresh_var("y", all_vars({lb, p1.ring}));
    const VElem pg_zero = pg->zero(), eb_zero = p1.path->zero(), b_zero = b->zero();
    VirtualHom kappa(
        lb, p1.ring, [pg_zero, u, w](const VElem& a) { return VElem::pair(pg_zero, a.rename(u, w)); }, "kappa");
    VirtualHom nu(
        loop_c, p1.ring, [b_zero, eb_zero](const VElem& c) { return VElem::pair(VElem::pair(b_zero, c), eb_zero); },
        "nu");
    VirtualHom h(
        lb, polynomial_ring(p1.ring, y2),
        [g, u, v, w, y2](const VElem& a) {
          VElem inner = VElem::pair(a.substitute({{u, IntPoly(1) - v_(y2)}}),
                                    g(a).substitute({{u, IntPoly(1) - v_(v) * v_(y2)}}));
          return VElem::pair(inner, a.substitute({{u, v_(w) - v_(w) * v_(y2)}}));
        },
        "rotation homotopy");
    out.rotation_square = VirtualCertificate{h, kappa, compose(nu, neg), y2};
  } else {
    first = loop_null(t.pending, lb, t.objects[1]);
  }
  out.composites = {first, t.composites[0]};
  return out;
}

TriangleReport check_triangle(const LeftTriangle& t, std::size_t probes_per_map, Rng& rng) {
  TriangleReport out;
  auto note = [&](const std::string& why) {
    ++out.failures;
    if (out.first_failure.empty()) out.first_failure = why;
  };
  for (std::size_t k = 0; k < t.maps.size(); ++k) {
    HomCheck hc = check_hom(t.maps[k], probes(t.objects[k], 12, rng));
    if (!hc.ok) note(t.maps[k].name() + ": " + hc.failure);
  }
  for (std::size_t k = 0; k < t.composites.size(); ++k) {
    VirtualHom composite = compose(t.maps[k + 1], t.maps[k]);
    const NullHomotopy& n = t.composites[k];
    if (!n.strict()) {
      HomCheck hc = check_hom(*n.h, probes(t.objects[k], 12, rng));
      if (!hc.ok) note(n.h->name() + ": " + hc.failure);
    }
    for (const VElem& a : probes(t.objects[k], probes_per_map, rng)) {
      ++out.probes;
      std::string why = check_null(n, composite, a);
      if (!why.empty()) note(why);
    }
  }
  if (t.rotation_square) {
    CertificateCheck c = verify_certificate(*t.rotation_square, probes(t.rotation_square->h.source(), probes_per_map, rng));
    out.rotation_square_ok = c.ok;
    if (!c.ok) note("rotation square: " + c.failure);
  }
  return out;
}

// ---------------------------------------------------------------- octahedron

Octahedron octahedron(const RingHom& h, const RingHom& k) {
  if (!h.is_surjective()) throw NotSurjective("h is not surjective: " + h.format());
  if (!k.is_surjective()) throw NotSurjective("k is not surjective: " + k.format());
  if (h.target() != k.source() && !same_ring(*h.target(), *k.source()))
    throw InvalidInput("octahedron: h and k are not composable");
  RingHom kh = compose(k, h);
  Subring a = kernel(h, "ker h"), f = kernel(kh, "ker kh"), e = kernel(k, "ker k");

  std::vector<RingElem> alpha_images, beta_images;
  for (std::size_t i = 0; i < a.ring->rank(); ++i) {
    auto at = f.locate(a.inclusion(a.ring->generator(i)));
    if (!at) throw VerificationFailure("ker h is not inside ker kh");
    alpha_images.push_back(*at);
  }
  for (std::size_t i = 0; i < f.ring->rank(); ++i) {
    auto at = e.locate(h(f.inclusion(f.ring->generator(i))));
    if (!at) throw VerificationFailure("h does not carry ker kh into ker k");
    beta_images.push_back(*at);
  }
  RingHom alpha(a.ring, f.ring, alpha_images), beta(f.ring, e.ring, beta_images);

  const VRing av = finite_of(a.ring), bv = finite_of(h.source()), cv = finite_of(h.target());
  const VRing fv = finite_of(f.ring), ev = finite_of(e.ring);
  MappingPath ph = mapping_path(renamed(VirtualHom::from_ring_hom(h, bv, cv), "h"), "P(h)");
  MappingPath pbeta = mapping_path(renamed(VirtualHom::from_ring_hom(beta, fv, ev), "beta"), "P(beta)");
  const VarId xc = ph.path->variable(), xe = pbeta.path->variable();

  VirtualHom g = VirtualHom::from_ring_hom(a.inclusion, av, bv);
  VirtualHom alpha_v = VirtualHom::from_ring_hom(alpha, av, fv);
  VirtualHom m = VirtualHom::from_ring_hom(f.inclusion, fv, bv);
  VirtualHom l = VirtualHom::from_ring_hom(e.inclusion, ev, cv);
  const VElem ec_zero = ph.path->zero(), ee_zero = pbeta.path->zero();

  VirtualHom i(av, ph.ring, [g, ec_zero](const VElem& x) { return VElem::pair(g(x), ec_zero); }, "i");
  VirtualHom delta(
      av, pbeta.ring, [alpha_v, ee_zero](const VElem& x) { return VElem::pair(alpha_v(x), ee_zero); }, "delta");
  VirtualHom loop_l = loop_map(l, pbeta.loops, ph.loops);
  VirtualHom psi(
      pbeta.ring, ph.ring,
      [m, l, xe, xc](const VElem& x) { return VElem::pair(m(x.first()), l(x.second()).rename(xe, xc)); }, "psi");

  std::vector<LeftTriangle> rows{standard_triangle(h), standard_triangle(kh), standard_triangle(k)};
  return Octahedron{h,     k,     a,           f,  e, alpha, beta, ph, pbeta, pbeta.loops, i,
                    delta, renamed(pbeta.j, "gamma"), loop_l, psi, std::move(rows)};
}

OctahedronReport check_octahedron(const Octahedron& o, int level) {
  OctahedronReport out;
  auto note = [&](const std::string& why) {
    ++out.failures;
    if (out.first_failure.empty()) out.first_failure = why;
  };

  std::set<RingElem> image;
  for (const RingElem& x : o.a.ring->elements()) image.insert(o.alpha(x));
  bool exact = o.alpha.is_injective() && o.beta.is_surjective();
  for (const RingElem& x : o.f.ring->elements())
    if (o.f.ring->is_zero(o.beta(x)) != (image.count(x) > 0)) exact = false;
  out.column_exact = exact;

  FiniteModel mp = finite_model(o.pbeta.ring, level), ml = finite_model(o.loop_e, level);
  std::vector<VElem> pb_elems, loop_elems, a_elems;
  for (const RingElem& x : mp.ring->elements()) pb_elems.push_back(mp.decode(x));
  for (const RingElem& x : ml.ring->elements()) loop_elems.push_back(ml.decode(x));
  for (const RingElem& x : o.a.ring->elements()) a_elems.push_back(VElem::leaf(Poly::constant(o.a.ring, x)));

  HomCheck hc = check_hom(o.psi, pb_elems, 256);
  out.probes += hc.checked_pairs;
  if (!hc.ok) note("psi: " + hc.failure);
  for (const VElem& x : loop_elems) {
    ++out.probes;
    if (!(o.psi(o.gamma(x)) == o.ph.j(o.loop_l(x)))) note("psi gamma differs from j Omega l at " + x.format());
  }
  for (const VElem& x : a_elems) {
    ++out.probes;
    if (!(o.psi(o.delta(x)) == o.i(x))) note("psi delta differs from i at " + x.format());
  }
  out.exhaustive = pb_elems.size() <= 256;
  return out;
}

// ---------------------------------------------------------------- factorization

VElem Factorization::preimage(const RingElem& b) const {
  const VarId x = ring->right()->variable();
  return VElem::pair(source->zero(), VElem::leaf(Poly::term(u.target(), b, Monomial::of(x))));
}

Factorization factorize(const RingHom& u) {
  const VRing av = finite_of(u.source()), bv = finite_of(u.target());
  const VarId x = fresh_var("x", {});
  const VRing bx = polynomial_ring(bv, x);
  VirtualHom uv = VirtualHom::from_ring_hom(u, av, bv);
  Sampler sample = [av, bx, uv, x](Rng& rng, unsigned degree) {
    VElem a = av->random_element(rng, degree);
    VElem q = bx->random_element(rng, degree);
    q = q - q.eval(x, 0) + uv(a);
    return VElem::pair(std::move(a), std::move(q));
  };
  const VRing ring = VirtualRing::pullback(uv, evaluation(bx, 0), sample, "A'");
  VirtualHom i(av, ring, [uv](const VElem& a) { return VElem::pair(a, uv(a)); }, "i");
  VirtualHom p(ring, bv, [x](const VElem& e) { return e.second().eval(x, 1); }, "p");
  VirtualHom iota1 = renamed(project_right(ring), "iota1");
  VirtualHom iota2 = renamed(project_left(ring), "iota2");
  const VarId y = fresh_var("y", ring->variables());
  VirtualHom h(
      ring, polynomial_ring(ring, y),
      [x, y](const VElem& e) { return VElem::pair(e.first(), e.second().substitute({{x, v_(x) * v_(y)}})); },
      "(a, q(x)) -> (a, q(xy))");
  VirtualCertificate splitting{h, compose(i, iota2), VirtualHom::identity(ring), y};
  return Factorization{u, av, bv, ring, i, p, iota1, iota2, splitting};
}

FactorizationReport check_factorization(const Factorization& f, std::size_t probe_count, Rng& rng) {
  FactorizationReport out;
  auto note = [&](bool& flag, const std::string& why) {
    flag = false;
    if (out.failure.empty()) out.failure = why;
  };
  const RingPtr& a = f.u.source();
  const RingPtr& b = f.u.target();
  std::vector<RingElem> as = a->size() <= probe_count ? a->elements() : std::vector<RingElem>{};
  for (std::size_t k = as.size(); k < probe_count && as.size() < probe_count && a->size() > probe_count; ++k)
    as.push_back(a->random_element(rng));
  for (const RingElem& x : as) {
    VElem e = f.source->constant(x);
    VElem ie = f.i(e);
    if (!f.ring->contains(ie)) note(out.factors, "i(a) is not in A' for a = " + a->format(x));
    else if (!(f.p(ie) == f.target->constant(f.u(x)))) note(out.factors, "p i differs from u at " + a->format(x));
    if (!(f.iota2(ie) == e)) note(out.retraction, "iota2 i differs from id at " + a->format(x));
  }
  std::vector<RingElem> bs = b->size() <= probe_count ? b->elements() : std::vector<RingElem>{};
  while (bs.size() < probe_count && b->size() > probe_count) bs.push_back(b->random_element(rng));
  for (const RingElem& y : bs) {
    VElem w = f.preimage(y);
    if (!f.ring->contains(w) || !(f.p(w) == f.target->constant(y)))
      note(out.surjective, "preimage witness fails for " + b->format(y));
  }
  std::vector<VElem> ps = probes(f.ring, std::max<std::size_t>(probe_count / 4, 8), rng);
  CertificateCheck c = verify_certificate(f.splitting, ps);
  if (!c.ok) note(out.splitting, "splitting homotopy: " + c.failure);
  for (const VirtualHom* m : {&f.p, &f.iota1, &f.iota2}) {
    HomCheck hc = check_hom(*m, ps);
    if (!hc.ok) note(out.homs, m->name() + ": " + hc.failure);
  }
  std::vector<VElem> src;
  for (const RingElem& x : as) src.push_back(f.source->constant(x));
  HomCheck hi = check_hom(f.i, src);
  if (!hi.ok) note(out.homs, "i: " + hi.failure);
  return out;
}

// ---------------------------------------------------------------- fibrations

FibrationFamily FibrationFamily::surjections(Diagram d) { return FibrationFamily{std::move(d), true, {}}; }

FibrationFamily FibrationFamily::of_marked(Diagram d, std::vector<std::string> names) {
  for (const std::string& n : names)
    if (!d.hom(n).is_surjective()) throw NotSurjective("marked hom " + n + " is not surjective");
  return FibrationFamily{std::move(d), false, std::move(names)};
}

bool FibrationFamily::contains(const RingHom& f) const {
  if (all_surjective) return f.is_surjective();
  for (const std::string& n : marked) {
    const RingHom& m = diagram.hom(n);
    if (same_ring(*m.source(), *f.source()) && same_ring(*m.target(), *f.target()) && m.images() == f.images())
      return true;
  }
  return false;
}

std::vector<AxiomResult> check_axioms(const FibrationFamily& family, std::size_t probe_count, Rng& rng) {
  const Diagram& d = family.diagram;
  auto ring_name = [&](const RingPtr& r) {
    for (const auto& [name, ptr] : d.rings)
      if (ptr == r) return name;
    return r->label();
  };
  auto hom_name = [&](const RingHom& f) {
    for (const auto& [name, h] : d.homs)
      if (&h == &f) return name;
    return ring_name(f.source()) + " -> " + ring_name(f.target());
  };
  std::vector<const RingHom*> fibrations;
  for (const auto& [name, h] : d.homs)
    if (family.contains(h)) fibrations.push_back(&h);

  std::vector<AxiomResult> out;
  AxiomResult ax1{"Ax1: R -> 0 is a fibration", true, {}};
  for (const auto& [name, r] : d.rings)
    if (!family.contains(RingHom::zero(r, zero_ring()))) ax1.violations.push_back(name + " -> 0");
  out.push_back(ax1);

  AxiomResult ax2{"Ax2: closed under composition", true, {}};
  for (const RingHom* f : fibrations)
    for (const RingHom* g : fibrations)
      if (f->target() == g->source() && !family.contains(compose(*g, *f)))
        ax2.violations.push_back(hom_name(*g) + " o " + hom_name(*f));
  out.push_back(ax2);

  AxiomResult ax3{"Ax3: stable under pullback", true, {}};
  for (const RingHom* f : fibrations)
    for (const auto& [gname, g] : d.homs) {
      if (g.target() != f->target()) continue;
      Pullback pb = pullback(*f, g);
      bool constructed = pb.sigma.is_surjective();
      // Independent check: every b has some a with f(a) = g(b).
      std::set<RingElem> fimage;
      for (const RingElem& a : f->source()->elements()) fimage.insert((*f)(a));
      bool brute = true;
      for (const RingElem& b : g.source()->elements())
        if (!fimage.count(g(b))) brute = false;
      const std::string what = "base change of " + hom_name(*f) + " along " + gname;
      if (constructed != brute) ax3.violations.push_back(what + ": construction disagrees with enumeration");
      else if (!constructed) ax3.violations.push_back(what + " is not surjective");
    }
  out.push_back(ax3);

  AxiomResult ax4{"Ax4: factorization through a path object", true, {}};
  for (const auto& [name, u] : d.homs) {
    FactorizationReport r = check_factorization(factorize(u), probe_count, rng);
    if (!r.ok()) ax4.violations.push_back(name + ": " + r.failure);
  }
  out.push_back(ax4);

  AxiomResult sat{"saturation: E A -> A is a fibration", true, {}};
  for (const auto& [name, r] : d.rings) {
    if (!family.all_surjective) {
      sat.violations.push_back(name + ": d1 on E(" + name + ") is not a marked hom");
      continue;
    }
    VRing e = path_ring(finite_of(r));
    VirtualHom d1 = evaluation(e, 1);
    const VarId x = e->variable();
    for (const RingElem& a : r->elements()) {
      VElem w = VElem::leaf(Poly::term(r, a, Monomial::of(x)));
      if (!e->contains(w) || !(d1(w) == VElem::leaf(Poly::constant(r, a)))) {
        sat.violations.push_back(name + ": a x does not lift " + r->format(a));
        break;
      }
    }
  }
  out.push_back(sat);

  for (AxiomResult& r : out) r.holds = r.violations.empty();
  return out;
}

GlFibrationFlag gl_fibration(const RingHom& g, int level, std::size_t size, std::uint64_t cap) {
  GlFibrationFlag out;
  out.level = level;
  out.size = size;
  if (!g.is_surjective()) {
    out.status = GlFibrationFlag::Status::Counterexample;
    out.note = "not surjective";
    return out;
  }
  const VRing eb = path_ring(finite_of(g.source())), ec = path_ring(finite_of(g.target()));
  const VarId xb = eb->variable(), xc = ec->variable();
  VirtualHom gv = VirtualHom::from_ring_hom(g, finite_of(g.source()), finite_of(g.target()));
  VirtualHom eg(eb, ec, [gv, xb, xc](const VElem& a) { return gv(a).rename(xb, xc); }, "E(g)");
  FiniteModel mb = finite_model(eb, level), mc = finite_model(ec, level);
  RingHom fg = finite_hom(eg, mb, mc);
  try {
    GlGroup gb = gl_group(mb.ring, size, cap), gc = gl_group(mc.ring, size, cap);
    std::vector<bool> hit(gc.order(), false);
    for (const Matrix& m : gb.elements) {
      std::vector<RingElem> entries;
      for (const RingElem& c : m.constants()) entries.push_back(fg(c));
      hit[gc.id_of(Matrix::from_elements(mc.ring, size, entries))] = true;
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      out.status = GlFibrationFlag::Status::Verified;
      out.note = "GL_" + std::to_string(size) + " of the level-" + std::to_string(level) + " truncation is onto";
    } else {
      out.note = "GL_" + std::to_string(size) + " of the level-" + std::to_string(level) +
                 " truncation is not onto; the untruncated map is undecided";
    }
  } catch (const BudgetExceeded& e) {
    out.note = e.what();
  }
  return out;
}

// ---------------------------------------------------------------- K0

namespace {

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array");
  std::vector<std::string> out;
  for (const Json& e : j) {
    if (!e.is_string()) throw InvalidInput(what + " entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Json big_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return Json(n.convert_to<std::int64_t>());
  return Json(n.str());
}

}  // namespace

K0Diagram k0_diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("objects")) throw InvalidInput("K0 diagram needs an \"objects\" array");
  K0Diagram d;
  d.objects = string_list(j.at("objects"), "objects");
  if (j.contains("weq"))
    for (const Json& e : j.at("weq")) {
      auto pair = string_list(e, "weq entry");
      if (pair.size() != 2) throw InvalidInput("weq entries are pairs");
      d.weq.emplace_back(pair[0], pair[1]);
    }
  if (j.contains("fib_seq"))
    for (const Json& e : j.at("fib_seq")) {
      auto triple = string_list(e, "fib_seq entry");
      if (triple.size() != 3) throw InvalidInput("fib_seq entries are triples [F, E, B]");
      d.fib_seq.push_back({triple[0], triple[1], triple[2]});
    }
  return d;
}

Json k0_diagram_to_json(const K0Diagram& d) {
  Json j;
  j["objects"] = d.objects;
  j["weq"] = Json::array();
  for (const auto& [a, b] : d.weq) j["weq"].push_back({a, b});
  j["fib_seq"] = Json::array();
  for (const auto& t : d.fib_seq) j["fib_seq"].push_back({t[0], t[1], t[2]});
  return j;
}

K0Presentation k0_presentation(const K0Diagram& d) {
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < d.objects.size(); ++k)
    if (!index.emplace(d.objects[k], k).second) throw InvalidInput("duplicate object " + d.objects[k]);
  auto at = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw InvalidInput("unknown object " + name);
    return it->second;
  };
  std::vector<std::vector<BigInt>> rows;
  const std::size_t n = d.objects.size();
  for (const auto& [a, b] : d.weq) {
    std::vector<BigInt> row(n, 0);
    row[at(a)] += 1;
    row[at(b)] -= 1;
    rows.push_back(row);
  }
  for (const auto& [f, e, b] : d.fib_seq) {
    std::vector<BigInt> row(n, 0);
    row[at(e)] += 1;
    row[at(f)] -= 1;
    row[at(b)] -= 1;
    rows.push_back(row);
  }
  if (index.count("0")) {
    std::vector<BigInt> row(n, 0);
    row[index["0"]] = 1;
    rows.push_back(row);
  }
  IntMatrix rel(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) rel(r, c) = rows[r][c];
  return k0_from_relations(rel, d.objects);
}

K0Presentation k0_from_relations(const IntMatrix& relations, std::vector<std::string> objects) {
  const std::size_t n = objects.size();
  if (relations.cols() != n) throw InvalidInput("relation matrix width differs from the object count");
  K0Presentation out;
  out.relations = relations;
  out.objects = std::move(objects);
  IntMatrix m(n, relations.rows());
  for (std::size_t r = 0; r < relations.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(c, r) = relations(r, c);

  // Quotient of Z^n by the column span of m: with L m R = D the class of e_k
  // has coordinates L e_k modulo the diagonal.
  IntMatrix left = IntMatrix::identity(n);
  std::vector<BigInt> diag;
  std::size_t rk = 0;
  if (relations.rows() > 0 && n > 0) {
    SmithForm s = smith_normal_form(m);
    left = s.left;
    rk = s.rank;
    for (std::size_t i = 0; i < rk; ++i) diag.push_back(s.diag(i, i));
  }
  out.rank = n - rk;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < rk; ++i)
    if (diag[i] > 1) {
      out.torsion.push_back(diag[i]);
      torsion_rows.push_back(i);
    }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<BigInt> coords;
    for (std::size_t t = 0; t < torsion_rows.size(); ++t)
      coords.push_back(mod_floor(left(torsion_rows[t], k), out.torsion[t]));
    for (std::size_t i = rk; i < n; ++i) coords.push_back(left(i, k));
    out.class_of.push_back(std::move(coords));
  }
  return out;
}

bool k0_vanishes(const K0Presentation& p, const std::vector<BigInt>& combination) {
  if (combination.size() != p.class_of.size()) throw InvalidInput("combination length differs from the object count");
  const std::size_t width = p.torsion.size() + p.rank;
  std::vector<BigInt> sum(width, 0);
  for (std::size_t k = 0; k < combination.size(); ++k)
    for (std::size_t i = 0; i < width; ++i) sum[i] += combination[k] * p.class_of[k][i];
  for (std::size_t t = 0; t < p.torsion.size(); ++t)
    if (mod_floor(sum[t], p.torsion[t]) != 0) return false;
  for (std::size_t i = p.torsion.size(); i < width; ++i)
    if (sum[i] != 0) return false;
  return true;
}

Json k0_to_json(const K0Presentation& p) {
  Json j;
  j["rank"] = p.rank;
  j["torsion"] = Json::array();
  for (const BigInt& t : p.torsion) j["torsion"].push_back(big_to_json(t));
  j["classes"] = Json::object();
  for (std::size_t k = 0; k < p.objects.size(); ++k) {
    Json c = Json::array();
    for (const BigInt& v : p.class_of[k]) c.push_back(big_to_json(v));
    j["classes"][p.objects[k]] = c;
  }
  return j;
}

}  // namespace hotring
