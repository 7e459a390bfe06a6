#pragma once

// Exact sparse multivariate polynomials with central variables.
//
// Poly has coefficients in a finite ring; IntPoly has integer coefficients and
// acts on Poly through the Z-module structure. Affine substitutions such as
// x |-> 1 - x go through IntPoly, since 1 is not an element of a nonunital R[x].

#include "hotring/ring.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace hotring {

using VarId = std::uint16_t;

/// Interned variable ids; the same name always yields the same id.
VarId var(std::string_view name);
const std::string& var_name(VarId v);
/// First of stem, stem1, stem2, ... not in avoid.
VarId fresh_var(std::string_view stem, const std::set<VarId>& avoid);

/// Exponent vector indexed by VarId, without trailing zeros.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId v, unsigned exponent = 1);

  unsigned degree(VarId v) const { return v < exps_.size() ? exps_[v] : 0u; }
  unsigned total_degree() const;
  bool is_one() const { return exps_.empty(); }
  Monomial without(VarId v) const;
  Monomial with(VarId v, unsigned exponent) const;
  std::set<VarId> vars() const;
  const std::vector<std::uint16_t>& exponents() const { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string format() const;

 private:
  void trim();
  std::vector<std::uint16_t> exps_;
};

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::int64_t c);  // NOLINT: integers are constant polynomials
  static IntPoly variable(VarId v);
  static IntPoly term(std::int64_t c, Monomial m);

  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<VarId> vars() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(const IntPoly& a) { return IntPoly(0) - a; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly pow(unsigned n) const;
  IntPoly substitute(const std::map<VarId, IntPoly>& assignment) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  std::string format() const;

 private:
  void add_term(const Monomial& m, std::int64_t c);
  std::map<Monomial, std::int64_t> terms_;
};

class Poly {
 public:
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(RingPtr ring, const RingElem& c);
  static Poly term(RingPtr ring, const RingElem& c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  const std::map<Monomial, RingElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::set<VarId> vars() const;
  unsigned degree(VarId v) const;
  /// Coefficient of the monomial 1.
  RingElem constant_term() const;
  /// Part of the polynomial multiplying v^e, with v removed.
  Poly coefficient(VarId v, unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  /// Z-action of an integer polynomial.
  friend Poly operator*(const IntPoly& q, const Poly& p);
  Poly scale(std::int64_t c) const;
  Poly times_monomial(const Monomial& m) const;

  /// Evaluation at 0 or 1 (the two endpoint homs).
  Poly eval(VarId v, int value) const;
  /// Simultaneous substitution of integer polynomials.
  Poly substitute(const std::map<VarId, IntPoly>& assignment) const;
  Poly rename(VarId from, VarId to) const;
  /// Applies a ring hom to every coefficient (f[x]).
  Poly map_coefficients(const RingHom& f) const;

  /// (quotient, remainder) of division by a monic univariate integer polynomial in v.
  std::pair<Poly, Poly> divide_monic(VarId v, const IntPoly& divisor) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  std::string format() const;

 private:
  void add_term(const Monomial& m, const RingElem& c);
  RingPtr ring_;
  std::map<Monomial, RingElem> terms_;
};

/// x^2 - x in the given variable.
IntPoly loop_factor(VarId v);

/// Random polynomial in vars with at most max_terms terms of per-variable degree <= max_degree.
Poly random_poly(const RingPtr& ring, const std::vector<VarId>& vars, unsigned max_degree, unsigned max_terms, Rng& rng);

}  // namespace hotring
