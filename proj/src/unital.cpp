#include "hotring/unital.hpp"

namespace hotring {

RingElem scale_big(const FiniteRing& r, const RingElem& a, const BigInt& n) {
  RingElem out = r.zero();
  for (std::size_t i = 0; i < r.rank(); ++i) {
    BigInt v = mod_floor(n * a.coords[i], r.order(i));
    out.coords[i] = static_cast<Coord>(v);
  }
  return out;
}

UnitalElem Unitalization::make(BigInt n, RingElem a) const {
  if (!base_->contains(a)) throw InvalidInput("unitalization: not an element of " + base_->label());
  return {std::move(n), std::move(a)};
}

UnitalElem Unitalization::add(const UnitalElem& x, const UnitalElem& y) const {
  return {x.n + y.n, base_->add(x.a, y.a)};
}

UnitalElem Unitalization::neg(const UnitalElem& x) const { return {-x.n, base_->neg(x.a)}; }

UnitalElem Unitalization::mul(const UnitalElem& x, const UnitalElem& y) const {
  const FiniteRing& r = *base_;
  RingElem a = r.add(r.add(scale_big(r, y.a, x.n), scale_big(r, x.a, y.n)), r.mul(x.a, y.a));
  return {x.n * y.n, std::move(a)};
}

UnitalElem Unitalization::random_element(Rng& rng, int integer_range) const {
  std::uniform_int_distribution<int> d(-integer_range, integer_range);
  return {BigInt(d(rng)), base_->random_element(rng)};
}

std::string Unitalization::format(const UnitalElem& x) const {
  return "(" + x.n.str() + "," + base_->format(x.a) + ")";
}

}  // namespace hotring
