#pragma once

// Closure operations of an admissible category on finite rings: ideals,
// quotients, kernels, fibre products, direct products, plus the finite
// truncations of path rings used to reduce infinite stages to finite ones.
//
// Every construction goes through an integer presentation: a subgroup of
// Z/d_1 + ... + Z/d_k is presented by an integer kernel computation followed by
// Smith normal form, which yields invariant-factor generators and a coordinate
// map back from the ambient ring.

#include "hotring/ring.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hotring {

/// Coordinates of a subgroup of an ambient finite abelian group.
class SubgroupPresentation {
 public:
  SubgroupPresentation(const FiniteRing& ambient, const std::vector<RingElem>& generators);

  /// Invariant factors (all > 1) of the subgroup.
  const std::vector<Coord>& orders() const { return orders_; }
  /// New generators as ambient elements, one per invariant factor.
  const std::vector<RingElem>& basis() const { return basis_; }
  /// Coordinates of an ambient element in the new basis; nullopt if outside.
  std::optional<std::vector<Coord>> locate(const RingElem& v) const;
  BigInt order() const;

 private:
  std::vector<Coord> ambient_orders_;
  std::size_t gen_count_ = 0;
  SmithForm system_;                 // [h_1..h_m | diag(d)]
  IntMatrix relation_right_;         // Q of the relation SNF, y = x Q
  std::vector<std::size_t> kept_;    // coordinates with invariant factor != 1
  std::vector<Coord> orders_;
  std::vector<RingElem> basis_;
};

struct Subring {
  RingPtr ring;
  RingHom inclusion;
  std::shared_ptr<const SubgroupPresentation> presentation;

  /// Preimage of an ambient element under the inclusion, if any.
  std::optional<RingElem> locate(const RingElem& ambient) const;
};

/// Subring additively generated by gens (must be closed under products;
/// validate_ring rejects it otherwise).
Subring subring(const RingPtr& ambient, const std::vector<RingElem>& gens, std::string label);

/// Same ring re-presented in invariant-factor form, with the isomorphism.
Subring canonicalize(const RingPtr& r);

RingPtr zero_ring();

struct Product {
  RingPtr ring;
  RingHom first, second;              // projections
  RingHom inject_first, inject_second;
  RingElem pair(const RingElem& a, const RingElem& b) const;
};
Product direct_product(const RingPtr& a, const RingPtr& b, std::string label = "");

/// {(a,b) : f(a) = g(b)} with projections rho (to f's source) and sigma (to g's source).
struct Pullback {
  RingPtr ring;
  RingHom rho, sigma;
  Product product;
  Subring embedding;  // into product.ring
  std::optional<RingElem> locate(const RingElem& a, const RingElem& b) const;
};
Pullback pullback(const RingHom& f, const RingHom& g, std::string label = "");

Subring kernel(const RingHom& f, std::string label = "");
Subring image(const RingHom& f, std::string label = "");

/// Two-sided ideal generated by gens, saturated by the worklist
/// I <- I + R*I + I*R until the subgroup order stops growing.
Subring ideal_closure(const RingPtr& r, const std::vector<RingElem>& gens, std::string label = "");

struct Quotient {
  RingPtr ring;
  RingHom projection;
  Subring ideal;
};
Quotient quotient(const RingPtr& r, const std::vector<RingElem>& ideal_gens, std::string label = "");

/// E_m R = x R[x] / (x^2 - x)^m R[x]: polynomials of degree < 2m without constant
/// term. Generator (i, e) for e = 1..2m-1 is g_i x^e at coordinate (e-1)*k + i.
/// Both endpoint evaluations factor through the truncation.
struct TruncatedPathRing {
  RingPtr ring;
  RingPtr base;
  int level = 0;
  RingHom endpoint;  // evaluation at x = 1, onto base
  /// Coordinates of sum_e coeff[e] x^e (coeff[0] must be zero), reduced mod (x^2-x)^m.
  RingElem reduce(const std::vector<RingElem>& coefficients) const;
  /// Set-theoretic section of the endpoint map: b |-> b x.
  RingElem lift(const RingElem& b) const;
};
TruncatedPathRing truncated_path_ring(const RingPtr& r, int level);

/// Integer coefficients r_1..r_{2m-1} of x^n mod (x^2-x)^m (the constant term is 0 for n >= 1).
std::vector<std::int64_t> reduce_power_mod_loop(int n, int level);

}  // namespace hotring
