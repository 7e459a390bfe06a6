#pragma once

// Shared helpers for the unit tests: seeded generators and brute-force oracles.

#include "hotring/corpus.hpp"
#include "hotring/ring.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hotring::testing {

inline Rng rng_for(std::uint64_t salt) { return Rng(0x5eed0000ULL + salt); }

/// Random rank-k ring with zero multiplication and orders in {2,3,4}.
inline RingPtr random_square_zero(Rng& rng, std::size_t max_rank = 3) {
  RawRing raw;
  raw.label = "rand_sq0";
  const std::size_t k = 1 + rng() % max_rank;
  for (std::size_t i = 0; i < k; ++i) raw.orders.push_back(2 + Coord(rng() % 3));
  raw.mul.assign(k, std::vector<std::vector<Coord>>(k, std::vector<Coord>(k, 0)));
  return validate_ring(raw);
}

/// f is a ring hom iff it is additive and multiplicative on all element pairs.
inline bool is_hom_by_enumeration(const FiniteRing& s, const FiniteRing& t, const std::vector<RingElem>& images) {
  auto apply = [&](const RingElem& a) {
    RingElem out = t.zero();
    for (std::size_t i = 0; i < s.rank(); ++i) out = t.add(out, t.scale(images[i], a.coords[i]));
    return out;
  };
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (!t.is_zero(t.scale(images[i], s.order(i)))) return false;
  auto elems = s.elements();
  for (const RingElem& a : elems)
    for (const RingElem& b : elems)
      if (apply(s.mul(a, b)) != t.mul(apply(a), apply(b))) return false;
  return true;
}

}  // namespace hotring::testing
