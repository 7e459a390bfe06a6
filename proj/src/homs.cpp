#include "hotring/homs.hpp"

#include <algorithm>
#include <limits>

namespace hotring {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

std::vector<RingHom> enumerate_homs(const RingPtr& source, const RingPtr& target, std::uint64_t cap) {
  const FiniteRing& r = *source;
  const FiniteRing& s = *target;
  const std::size_t k = r.rank();
  const std::uint64_t required = saturating_pow(s.size(), k);
  if (required > cap) throw BudgetExceeded("enumerate_homs " + r.label() + " -> " + s.label(), required, cap);

  // Candidates for g_i: elements killed by the order of g_i.
  std::vector<std::vector<RingElem>> candidates(k);
  if (k > 0) {
    std::vector<RingElem> all = s.elements(cap);
    for (std::size_t i = 0; i < k; ++i)
      for (const RingElem& x : all)
        if (s.is_zero(s.scale(x, r.order(i)))) candidates[i].push_back(x);
    // Depth-first over sorted candidates yields homs in lexicographic order.
    for (auto& c : candidates) std::sort(c.begin(), c.end());
  }
  // Pair (i,j) can be checked once every generator in the support of g_i g_j is assigned.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ready(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t last = std::max(i, j);
      const RingElem& p = r.generator_product(i, j);
      for (std::size_t l = 0; l < k; ++l)
        if (p.coords[l] != 0) last = std::max(last, l);
      ready[last].emplace_back(i, j);
    }

  std::vector<RingHom> out;
  std::vector<RingElem> images(k);
  auto apply = [&](const RingElem& a) {
    RingElem v = s.zero();
    for (std::size_t l = 0; l < k; ++l)
      if (a.coords[l] != 0) v = s.add(v, s.scale(images[l], a.coords[l]));
    return v;
  };
  auto recurse = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      out.emplace_back(source, target, images);
      return;
    }
    for (const RingElem& x : candidates[depth]) {
      images[depth] = x;
      bool ok = true;
      for (auto [i, j] : ready[depth])
        if (apply(r.generator_product(i, j)) != s.mul(images[i], images[j])) {
          ok = false;
          break;
        }
      if (ok) self(self, depth + 1);
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace hotring
