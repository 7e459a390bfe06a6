#pragma once

#include "hotring/ring.hpp"

#include <cstdint>
#include <vector>

namespace hotring {

/// Every ring hom R -> S, in lexicographic order of generator images.
/// Throws BudgetExceeded when |S|^rank(R) exceeds cap.
std::vector<RingHom> enumerate_homs(const RingPtr& source, const RingPtr& target, std::uint64_t cap = 1u << 24);

/// Saturating |base|^exp.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace hotring
