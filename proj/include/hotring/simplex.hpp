#pragma once

// The simplicial ring R[Delta]: level n is R[t_0..t_n]/(sum t_i - 1)R, stored
// through the isomorphism with R[t_1..t_n] (t_0 = 1 - t_1 - ... - t_n).
// Face and degeneracy operators are integer substitutions in the t variables.

#include "hotring/poly.hpp"

#include <vector>

namespace hotring {

/// Variable t_j for j >= 1.
VarId simplex_var(int j);
/// t_j at level n as an integer polynomial in t_1..t_n (so t_0 = 1 - sum).
IntPoly simplex_coordinate(int n, int j);
/// All variables t_1..t_n.
std::vector<VarId> simplex_vars(int n);

/// Face d_i: R[Delta^n] -> R[Delta^(n-1)], 0 <= i <= n.
Poly face(const Poly& p, int n, int i);
/// Degeneracy s_i: R[Delta^n] -> R[Delta^(n+1)], 0 <= i <= n.
Poly degeneracy(const Poly& p, int n, int i);

/// The isomorphism R[t] -> R[Delta^1], t |-> t_0.
Poly to_simplex1(const Poly& p, VarId t);

/// Vertices v(i) of Delta^1 at level n, i in [-1, n]: 0..i go to 0, the rest to 1.
int face_of_vertex(int i, int k);        // index of d_k v(i)
int degeneracy_of_vertex(int i, int k);  // index of s_k v(i)

/// Vertex homotopy on R[x][Delta^n]: x |-> x (t_0 + ... + t_i), x |-> 0 for i = -1.
Poly contraction_map(const Poly& p, VarId x, int n, int i);

/// Random element of R[Delta^n] (optionally with x adjoined).
Poly random_simplex_elem(const RingPtr& ring, int n, Rng& rng, unsigned max_degree = 2, unsigned max_terms = 4,
                         std::optional<VarId> extra = std::nullopt);

}  // namespace hotring
