#pragma once

// Intensional rings: finite rings closed under polynomial extension (with
// optional vanishing at x = 0 and/or x = 1), fibre products and
// unitalization. Elements mirror the constructor tree; membership is decided
// by descending it. Homomorphisms are arbitrary functions on elements that are
// linear in every variable they do not mention, so the same function serves as
// f and as f[y] on polynomials in a fresh variable y.

#include "hotring/construct.hpp"
#include "hotring/poly.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hotring {

class VElem {
 public:
  enum class Kind { Leaf, Pair, Unital };

  static VElem leaf(Poly p);
  static VElem pair(VElem a, VElem b);
  static VElem unital(BigInt n, VElem a);

  Kind kind() const { return kind_; }
  const Poly& poly() const;
  const VElem& first() const;
  const VElem& second() const;
  const BigInt& integer() const;
  const VElem& augment() const;  // the ring part of a unital element

  bool is_zero() const;
  std::set<VarId> vars() const;

  friend VElem operator+(const VElem& a, const VElem& b);
  friend VElem operator-(const VElem& a, const VElem& b);
  friend VElem operator-(const VElem& a);
  friend VElem operator*(const VElem& a, const VElem& b);
  /// Z[vars]-action; on unital elements only constants are allowed.
  friend VElem operator*(const IntPoly& q, const VElem& a);
  VElem scale_big(const BigInt& n) const;

  VElem eval(VarId v, int value) const;
  VElem substitute(const std::map<VarId, IntPoly>& assignment) const;
  VElem rename(VarId from, VarId to) const;
  /// Part multiplying v^e, with v removed.
  VElem coefficient(VarId v, unsigned e) const;
  unsigned degree(VarId v) const;

  friend bool operator==(const VElem& a, const VElem& b);
  std::string format() const;

 private:
  VElem() = default;
  Kind kind_ = Kind::Leaf;
  std::optional<Poly> leaf_;
  std::vector<VElem> parts_;
  BigInt n_ = 0;
};

class VirtualRing;
using VRing = std::shared_ptr<const VirtualRing>;

class VirtualHom {
 public:
  using Fn = std::function<VElem(const VElem&)>;
  VirtualHom(VRing source, VRing target, Fn fn, std::string name);

  static VirtualHom from_ring_hom(const RingHom& f, const VRing& source, const VRing& target);
  static VirtualHom identity(const VRing& r);
  static VirtualHom zero(const VRing& source, const VRing& target);

  const VRing& source() const { return source_; }
  const VRing& target() const { return target_; }
  const std::string& name() const { return name_; }
  VElem operator()(const VElem& a) const { return fn_(a); }
  /// Applies the map after checking source membership and then target membership.
  VElem checked(const VElem& a) const;

 private:
  VRing source_, target_;
  Fn fn_;
  std::string name_;
};

/// g after f.
VirtualHom compose(const VirtualHom& g, const VirtualHom& f);

using Sampler = std::function<VElem(Rng&, unsigned degree)>;

class VirtualRing : public std::enable_shared_from_this<VirtualRing> {
 public:
  enum class Kind { Finite, Poly, Pullback, Unital };

  static VRing finite(RingPtr ring);
  /// base[v], restricted to p(0) = 0 when vanish0 and p(1) = 0 when vanish1.
  static VRing poly(VRing base, VarId v, bool vanish0, bool vanish1, std::string label = "");
  /// {(a,b) : f(a) = g(b)}. The sampler draws members; without one, members are
  /// drawn from the finite fibre product when both factors are finite.
  static VRing pullback(VirtualHom f, VirtualHom g, Sampler sampler = {}, std::string label = "");
  static VRing unitalization(VRing base);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const RingPtr& ring() const;  // Finite only
  const VRing& base() const;    // Poly, Unital
  VarId variable() const;       // Poly only
  bool vanish0() const { return vanish0_; }
  bool vanish1() const { return vanish1_; }
  const VirtualHom& f() const;  // Pullback only
  const VirtualHom& g() const;
  VRing left() const { return f().source(); }
  VRing right() const { return g().source(); }

  VElem zero() const;
  /// Embeds a constant of the underlying finite ring (Finite only).
  VElem constant(const RingElem& a) const;
  /// Why e is not an element (with `free` the variables allowed from outer
  /// polynomial extensions), or nullopt.
  std::optional<std::string> membership_defect(const VElem& e, const std::set<VarId>& free = {}) const;
  bool contains(const VElem& e) const { return !membership_defect(e); }
  void require(const VElem& e) const;

  VElem random_element(Rng& rng, unsigned degree = 2) const;
  /// Every variable adjoined somewhere in the tree.
  std::set<VarId> variables() const;
  std::string describe() const;

 private:
  VirtualRing() = default;
  Kind kind_ = Kind::Finite;
  std::string label_;
  RingPtr ring_;
  VRing base_;
  VarId var_ = 0;
  bool vanish0_ = false, vanish1_ = false;
  std::shared_ptr<VirtualHom> f_, g_;
  Sampler sampler_;
};

VRing polynomial_ring(const VRing& base, VarId v);
/// ER = xR[x] in a variable fresh for base.
VRing path_ring(const VRing& base, std::string_view stem = "x");
/// OmegaR = (x^2 - x)R[x].
VRing loop_ring(const VRing& base, std::string_view stem = "x");
/// E'R = {p : p(1) = 0}.
VRing copath_ring(const VRing& base, std::string_view stem = "x");

/// Evaluation of a Poly-node ring at its variable, onto the base.
VirtualHom evaluation(const VRing& poly_ring, int value);
/// Inclusion of a Poly-node ring into base[v] (forgets vanishing conditions).
VirtualHom forget_vanishing(const VRing& poly_ring, const VRing& full);
/// Projections of a pullback onto its factors.
VirtualHom project_left(const VRing& pullback);
VirtualHom project_right(const VRing& pullback);

/// Report of a homomorphism check on probes.
struct HomCheck {
  bool ok = true;
  std::string failure;
  std::size_t checked_pairs = 0;
};

/// Checks membership of images, additivity and multiplicativity on every
/// ordered pair of probes when there are at most all_pairs_limit of them, and on
/// consecutive pairs otherwise.
HomCheck check_hom(const VirtualHom& f, const std::vector<VElem>& probes, std::size_t all_pairs_limit = 64);

/// Probe set: zero, then random members.
std::vector<VElem> probes(const VRing& r, std::size_t count, Rng& rng, unsigned degree = 2);

/// Reduction of a ring tree to a finite ring by working modulo (x^2 - x)^m in
/// every adjoined variable. Supported for Finite leaves, Poly nodes vanishing at
/// 0, and fibre products of supported rings.
struct FiniteModel {
  RingPtr ring;
  std::function<RingElem(const VElem&)> encode;
  std::function<VElem(const RingElem&)> decode;
};
FiniteModel finite_model(const VRing& r, int level);
/// The induced map between finite models; RingHom construction verifies it.
RingHom finite_hom(const VirtualHom& f, const FiniteModel& source, const FiniteModel& target);

}  // namespace hotring
