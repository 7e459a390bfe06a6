#include "hotring/loops.hpp"

namespace hotring {

namespace {

VElem map_leaves(const VElem& e, const std::function<Poly(const Poly&)>& fn) {
  switch (e.kind()) {
    case VElem::Kind::Leaf:
      return VElem::leaf(fn(e.poly()));
    case VElem::Kind::Pair:
      return VElem::pair(map_leaves(e.first(), fn), map_leaves(e.second(), fn));
    case VElem::Kind::Unital:
      throw InvalidInput("loop operations do not apply to a unitalization");
  }
  return e;
}

IntPoly one_minus(VarId v) { return IntPoly(1) - IntPoly::variable(v); }

void require_loop(const VRing& r) {
  if (r->kind() != VirtualRing::Kind::Poly || !r->vanish0() || !r->vanish1())
    throw InvalidInput(r->label() + " is not a loop ring");
}

}  // namespace

VRing product_ring(const VRing& a, const VRing& b) {
  VRing zero = VirtualRing::finite(zero_ring());
  Sampler sample = [a, b](Rng& rng, unsigned degree) {
    VElem x = a->random_element(rng, degree);
    return VElem::pair(std::move(x), b->random_element(rng, degree));
  };
  return VirtualRing::pullback(VirtualHom::zero(a, zero), VirtualHom::zero(b, zero), sample,
                               a->label() + " x " + b->label());
}

VirtualHom sigma(const VRing& loop) {
  require_loop(loop);
  const VarId x = loop->variable();
  return VirtualHom(
      loop, loop, [x](const VElem& a) { return a.substitute({{x, one_minus(x)}}); }, "sigma");
}

VirtualHom loop_map(const VirtualHom& f, const VRing& loop_source, const VRing& loop_target) {
  require_loop(loop_source);
  require_loop(loop_target);
  const VarId xs = loop_source->variable(), xt = loop_target->variable();
  VirtualHom fc = f;
  return VirtualHom(
      loop_source, loop_target, [fc, xs, xt](const VElem& a) { return fc(a).rename(xs, xt); }, "Omega(" + f.name() + ")");
}

VirtualHom tau(const VRing& loop2) {
  require_loop(loop2);
  require_loop(loop2->base());
  const VarId y = loop2->variable(), x = loop2->base()->variable();
  return VirtualHom(
      loop2, loop2,
      [x, y](const VElem& a) { return a.substitute({{x, IntPoly::variable(y)}, {y, IntPoly::variable(x)}}); }, "tau");
}

VElem double_loop_cofactor(const VElem& f, VarId x, VarId y) {
  return map_leaves(f, [x, y](const Poly& p) {
    auto [qx, rx] = p.divide_monic(x, loop_factor(x));
    if (!rx.is_zero()) throw MembershipViolation("not divisible by x^2 - x: " + p.format());
    auto [qy, ry] = qx.divide_monic(y, loop_factor(y));
    if (!ry.is_zero()) throw MembershipViolation("not divisible by y^2 - y: " + p.format());
    return qy;
  });
}

VElem swap_homotopy(const VElem& f, VarId x, VarId y, VarId t) {
  const IntPoly X = IntPoly::variable(t) * IntPoly::variable(x) + one_minus(t) * IntPoly::variable(y);
  const IntPoly Y = one_minus(t) * IntPoly::variable(x) + IntPoly::variable(t) * IntPoly::variable(y);
  const IntPoly edge = loop_factor(x) * loop_factor(y);
  VElem cof = double_loop_cofactor(f, x, y);
  return edge * cof.substitute({{x, X}, {y, Y}});
}

VirtualHom swap_homotopy_map(const VRing& loop2, VarId t) {
  require_loop(loop2);
  require_loop(loop2->base());
  const VarId y = loop2->variable(), x = loop2->base()->variable();
  VRing target = polynomial_ring(loop2, t);
  return VirtualHom(
      loop2, target, [x, y, t](const VElem& a) { return swap_homotopy(a, x, y, t); }, "H");
}

VirtualHom path_contraction(const VRing& path, VarId y) {
  if (path->kind() != VirtualRing::Kind::Poly || !path->vanish0() || path->vanish1())
    throw InvalidInput(path->label() + " is not a path ring");
  const VarId x = path->variable();
  VRing target = polynomial_ring(path, y);
  return VirtualHom(
      path, target,
      [x, y](const VElem& a) { return a.substitute({{x, IntPoly::variable(x) * IntPoly::variable(y)}}); },
      "p(x) -> p(xy)");
}

PathPairs path_pairs(const VRing& b) {
  const VarId x = fresh_var("x", b->variables());
  VRing path = VirtualRing::poly(b, x, true, false);
  VRing copath = VirtualRing::poly(b, x, false, true);
  VRing loop = VirtualRing::poly(b, x, true, true);
  Sampler sample = [path, b, x](Rng& rng, unsigned degree) {
    VElem f = path->random_element(rng, degree);
    VElem g = one_minus(x) * f.eval(x, 1) + loop_factor(x) * b->random_element(rng, degree);
    return VElem::pair(std::move(f), std::move(g));
  };
  VRing ring = VirtualRing::pullback(evaluation(path, 1), evaluation(copath, 0), sample,
                                     "~Omega(" + b->label() + ")");
  VRing pairs = product_ring(loop, loop);
  VElem zero = b->zero();
  VirtualHom alpha(loop, ring, [zero](const VElem& f) { return VElem::pair(f, zero); }, "alpha");
  VirtualHom beta(loop, ring, [zero](const VElem& f) { return VElem::pair(zero, f); }, "beta");
  VirtualHom omega(pairs, ring, [](const VElem& fg) { return fg; }, "omega");
  return PathPairs{ring, path, copath, loop, pairs, alpha, beta, omega};
}

}  // namespace hotring
