#pragma once

// A+ = Z + A with (n,a)(m,b) = (nm, nb + ma + ab). The integer part is unbounded.

#include "hotring/ring.hpp"

#include <string>

namespace hotring {

struct UnitalElem {
  BigInt n;
  RingElem a;
  friend bool operator==(const UnitalElem&, const UnitalElem&) = default;
};

class Unitalization {
 public:
  explicit Unitalization(RingPtr base) : base_(std::move(base)) {}

  const RingPtr& base() const { return base_; }

  UnitalElem one() const { return {1, base_->zero()}; }
  UnitalElem zero() const { return {0, base_->zero()}; }
  UnitalElem make(BigInt n, RingElem a) const;

  UnitalElem add(const UnitalElem& x, const UnitalElem& y) const;
  UnitalElem neg(const UnitalElem& x) const;
  UnitalElem mul(const UnitalElem& x, const UnitalElem& y) const;

  /// epsilon(n, a) = n
  BigInt augmentation(const UnitalElem& x) const { return x.n; }
  /// a |-> (0, a)
  UnitalElem include(const RingElem& a) const { return {0, a}; }
  bool in_augmentation_kernel(const UnitalElem& x) const { return x.n == 0; }

  UnitalElem random_element(Rng& rng, int integer_range = 5) const;
  std::string format(const UnitalElem& x) const;

 private:
  RingPtr base_;
};

/// Multiplies a ring element by an arbitrary integer.
RingElem scale_big(const FiniteRing& r, const RingElem& a, const BigInt& n);

}  // namespace hotring
