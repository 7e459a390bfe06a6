#pragma once

// GL_n of a nonunital ring as the group of n x n matrices M under the circle
// product M o N = M + N + MN (the matrix I + M of the unitalization, stored as
// M), and the bounded computation of pi_0 of GL_n(A[Delta]): the quotient of
// GL_n(A) by the subgroup generated by endpoints P(1) of polynomial paths P(t)
// with P(0) = 0.

#include "hotring/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hotring {

/// Square matrix over a finite ring, or over its polynomial extension when
/// entries carry variables. Entries are polynomials either way.
class Matrix {
 public:
  Matrix(RingPtr ring, std::size_t n);
  static Matrix from_elements(const RingPtr& ring, std::size_t n, const std::vector<RingElem>& entries);

  std::size_t size() const { return n_; }
  const RingPtr& ring() const { return ring_; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<Poly>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_constant() const;
  std::vector<RingElem> constants() const;  // requires is_constant()

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.entries_ == b.entries_; }
  Matrix eval(VarId v, int value) const;
  /// diag(M, 0) of size n + 1.
  Matrix stabilize() const;
  std::string format() const;

 private:
  RingPtr ring_;
  std::size_t n_;
  std::vector<Poly> entries_;
};

/// M o N = M + N + MN.
Matrix circle(const Matrix& a, const Matrix& b);

struct QiMatrix {
  Matrix m, witness;  // m o witness = witness o m = 0
};
bool witness_holds(const QiMatrix& q);

struct QiResult {
  enum class Status { Found, NotQuasiInvertible, Unknown };
  Status status = Status::Unknown;
  std::optional<Matrix> witness;
  std::vector<std::string> trace;  // strategies tried, in order
};

struct QiOptions {
  std::uint64_t enumeration_cap = 1u << 16;  // candidate witnesses / circle powers
  unsigned witness_degree = 2;               // degree cap for enumerated polynomial witnesses
};

/// Cascade: nilpotent series, classical inverse over a commutative unital base
/// (with the unit test for polynomial determinants), then bounded enumeration.
QiResult quasi_inverse(const Matrix& m, const QiOptions& options = {});

struct GlGroup {
  RingPtr ring;
  std::size_t n = 0;
  std::vector<Matrix> elements;   // in enumeration order; elements[0] is the identity 0
  std::vector<std::size_t> inverse;
  std::vector<std::int64_t> slot;  // matrix index -> element id, -1 if not invertible

  std::size_t order() const { return elements.size(); }
  std::uint64_t matrix_index(const Matrix& m) const;
  std::size_t id_of(const Matrix& m) const;  // throws if not in the group
  std::size_t mul(std::size_t a, std::size_t b) const;
};

struct GroupAxioms {
  bool identity = true, closure = true, inverses = true, associativity = true;
  bool exhaustive = true;  // false when associativity was sampled
  bool ok() const { return identity && closure && inverses && associativity; }
};

/// All quasi-invertible n x n matrices over a finite ring. Throws
/// BudgetExceeded when |A|^(n^2) exceeds cap.
GlGroup gl_group(const RingPtr& a, std::size_t n, std::uint64_t cap = 1u << 16);
GroupAxioms check_group_axioms(const GlGroup& g, std::uint64_t exhaustive_cap = 1u << 18, Rng* rng = nullptr);

struct DeterminantCertificate {
  bool applicable = false;  // commutative, unital, reduced base
  std::size_t image_order = 0;
  bool exact = false;       // quotient order equals the determinant image
};

struct Pi0Presentation {
  std::string ring;
  std::size_t n = 0;
  unsigned degree = 0;
  std::size_t group_order = 0, subgroup_order = 0, order = 0;
  std::vector<std::size_t> class_of;     // per GL element
  std::vector<Matrix> representatives;   // one per class
  std::vector<std::size_t> generators;   // GL ids of endpoints that enlarged the subgroup
  std::vector<std::size_t> subgroup;     // GL ids in the subgroup
  bool normal = true;
  bool abelian = true;
  std::vector<BigInt> invariant_factors;  // when abelian
  std::uint64_t candidates = 0, skipped_known = 0, skipped_unknown = 0, rejected = 0;
  std::vector<std::size_t> monotone_history;  // class counts at degrees 1..degree
  bool monotone = true;
  DeterminantCertificate determinant;
};

struct Kv1Options {
  std::uint64_t gl_cap = 1u << 16;
  std::uint64_t candidate_cap = 1u << 22;
  QiOptions qi;
};

/// Level-(n, d) approximation of KV_1(A).
Pi0Presentation kv1_approx(const RingPtr& a, std::size_t n, unsigned d, const Kv1Options& options = {});

struct StabilizationCheck {
  bool homomorphism = true;
  bool preserves_relation = true;
  std::size_t classes_n = 0, classes_n1 = 0;
};
/// Checks M |-> diag(M, 0) from GL_n to GL_(n+1) against the level-(n, d) data.
StabilizationCheck check_stabilization(const RingPtr& a, std::size_t n, unsigned d, const Kv1Options& options = {});

/// Reflexive-symmetric-transitive closure of verified edges on {0..count-1}.
std::vector<std::size_t> strict_pi0(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Determinant of a square matrix over a commutative ring (cofactor expansion).
Poly determinant(const Matrix& m);

}  // namespace hotring
