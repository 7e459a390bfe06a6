#pragma once

// Bundled small rings and the three-object surjection tower.

#include "hotring/ring.hpp"

#include <string>
#include <vector>

namespace hotring {

/// Labels of the bundled rings, in a fixed order.
const std::vector<std::string>& corpus_labels();
RawRing corpus_raw(const std::string& label);
RingPtr corpus_ring(const std::string& label);
std::vector<RingPtr> corpus_rings();

/// (Z/2)^3 -> (Z/2)^2 -> Z/2 with zero multiplication, dropping the last coordinate.
struct Tower {
  RingPtr top, middle, bottom;
  RingHom h, k;  // top -> middle, middle -> bottom
};
Tower corpus_tower();

}  // namespace hotring
