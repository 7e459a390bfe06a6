#pragma once

// Randomized checks of the simplicial structure on R[Delta] and of the
// vertex homotopies x |-> x(t_0 + ... + t_i) on R[x][Delta].

#include "hotring/simplex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hotring {

struct IdentityTally {
  std::string family;
  std::uint64_t probes = 0, failures = 0;
  std::string first_failure;
};

struct SimplicialReport {
  std::string ring;
  int max_level = 0;
  std::vector<IdentityTally> families;
  bool ok() const;
};

/// The five families of simplicial identities at levels 0..max_level, with
/// probes_per_family random (element, index) draws per family.
SimplicialReport simplicial_identities(const RingPtr& ring, int max_level, std::uint64_t probes_per_family, Rng& rng);

/// Face and degeneracy compatibility of the vertex homotopies for n <= max_level,
/// plus the two endpoint checks on Delta^1.
SimplicialReport vertex_homotopies(const RingPtr& ring, int max_level, std::uint64_t probes_per_family, Rng& rng);

}  // namespace hotring
