#pragma once

// Operations on loop rings: the sign involution sigma, the coordinate swap tau
// on double loops with its homotopy to the identity, the contraction of path
// rings, and the ring of composable path pairs with its maps alpha, beta, omega.

#include "hotring/virtual.hpp"

namespace hotring {

/// Direct product as a fibre product over the zero ring.
VRing product_ring(const VRing& a, const VRing& b);

/// sigma: a(x) |-> a(1 - x) on a loop ring.
VirtualHom sigma(const VRing& loop);
/// Omega(f) on loop rings built over f's source and target in the same variable.
VirtualHom loop_map(const VirtualHom& f, const VRing& loop_source, const VRing& loop_target);
/// tau on a double loop ring: swaps the inner and outer loop variables.
VirtualHom tau(const VRing& loop2);

/// f' with f = (x^2 - x)(y^2 - y) f'; throws MembershipViolation when f does
/// not vanish on the four edges.
VElem double_loop_cofactor(const VElem& f, VarId x, VarId y);
/// (x^2 - x)(y^2 - y) f'(tx + (1-t)y, (1-t)x + ty). Additive with endpoints
/// t = 1 -> f and t = 0 -> tau(f); multiplicative only when the products it
/// sees vanish (see tests).
VElem swap_homotopy(const VElem& f, VarId x, VarId y, VarId t);
/// The swap homotopy as a map Omega^2 B -> (Omega^2 B)[t].
VirtualHom swap_homotopy_map(const VRing& loop2, VarId t);

/// p(x) |-> p(xy) on ER, a map into (ER)[y] with d0_y = 0 and d1_y = id.
VirtualHom path_contraction(const VRing& path, VarId y);

/// {(f, g) : f(0) = 0, f(1) = g(0), g(1) = 0} inside B[x] x B[x].
struct PathPairs {
  VRing ring;
  VRing path;    // E B in x
  VRing copath;  // E' B in x
  VRing loop;    // Omega B in x
  VRing loop_pair;
  VirtualHom alpha;  // f |-> (f, 0)
  VirtualHom beta;   // f |-> (0, f)
  VirtualHom omega;  // (f, g) |-> (f, g)
};
PathPairs path_pairs(const VRing& b);

}  // namespace hotring
