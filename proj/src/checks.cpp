#include "hotring/checks.hpp"

#include <algorithm>
#include <functional>

namespace hotring {

bool SimplicialReport::ok() const {
  return std::all_of(families.begin(), families.end(), [](const IdentityTally& t) { return t.failures == 0; });
}

namespace {

int pick(Rng& rng, int lo, int hi) { return lo + int(rng() % std::uint64_t(hi - lo + 1)); }

// Runs `probes` draws of check(rng), which returns "" on success or a description.
IdentityTally tally(std::string family, std::uint64_t probes, Rng& rng,
                    const std::function<std::string(Rng&)>& check) {
  IdentityTally t;
  t.family = std::move(family);
  for (std::uint64_t k = 0; k < probes; ++k) {
    ++t.probes;
    std::string why = check(rng);
    if (why.empty()) continue;
    if (t.failures++ == 0) t.first_failure = std::move(why);
  }
  return t;
}

std::string describe(const std::string& law, int n, int i, int j, const Poly& p) {
  return law + " at n=" + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + " on " +
         p.format();
}

}  // namespace

SimplicialReport simplicial_identities(const RingPtr& ring, int max_level, std::uint64_t probes, Rng& rng) {
  if (max_level < 2) throw InvalidInput("simplicial identities need levels up to at least 2");
  SimplicialReport out;
  out.ring = ring->label();
  out.max_level = max_level;
  auto elem = [&](Rng& g, int n) { return random_simplex_elem(ring, n, g); };

  // d_i d_j = d_{j-1} d_i for i < j.
  out.families.push_back(tally("d_i d_j = d_(j-1) d_i (i < j)", probes, rng, [&](Rng& g) -> std::string {
    const int n = pick(g, 2, max_level), j = pick(g, 1, n), i = pick(g, 0, j - 1);
    Poly p = elem(g, n);
    if (face(face(p, n, j), n - 1, i) == face(face(p, n, i), n - 1, j - 1)) return "";
    return describe("dd", n, i, j, p);
  }));
  // s_i s_j = s_{j+1} s_i for i <= j.
  out.families.push_back(tally("s_i s_j = s_(j+1) s_i (i <= j)", probes, rng, [&](Rng& g) -> std::string {
    const int n = pick(g, 0, max_level), j = pick(g, 0, n), i = pick(g, 0, j);
    Poly p = elem(g, n);
    if (degeneracy(degeneracy(p, n, j), n + 1, i) == degeneracy(degeneracy(p, n, i), n + 1, j + 1)) return "";
    return describe("ss", n, i, j, p);
  }));
  // d_i s_j = s_{j-1} d_i for i < j.
  out.families.push_back(tally("d_i s_j = s_(j-1) d_i (i < j)", probes, rng, [&](Rng& g) -> std::string {
    const int n = pick(g, 1, max_level), j = pick(g, 1, n), i = pick(g, 0, j - 1);
    Poly p = elem(g, n);
    if (face(degeneracy(p, n, j), n + 1, i) == degeneracy(face(p, n, i), n - 1, j - 1)) return "";
    return describe("ds", n, i, j, p);
  }));
  // d_j s_j = d_{j+1} s_j = id.
  out.families.push_back(tally("d_j s_j = d_(j+1) s_j = id", probes, rng, [&](Rng& g) -> std::string {
    const int n = pick(g, 0, max_level), j = pick(g, 0, n);
    Poly p = elem(g, n);
    Poly s = degeneracy(p, n, j);
    if (face(s, n + 1, j) == p && face(s, n + 1, j + 1) == p) return "";
    return describe("ds=id", n, j, j, p);
  }));
  // d_i s_j = s_j d_{i-1} for i > j + 1.
  out.families.push_back(tally("d_i s_j = s_j d_(i-1) (i > j+1)", probes, rng, [&](Rng& g) -> std::string {
    const int n = pick(g, 1, max_level), j = pick(g, 0, n - 1), i = pick(g, j + 2, n + 1);
    Poly p = elem(g, n);
    if (face(degeneracy(p, n, j), n + 1, i) == degeneracy(face(p, n, i - 1), n - 1, j)) return "";
    return describe("ds'", n, i, j, p);
  }));
  return out;
}

SimplicialReport vertex_homotopies(const RingPtr& ring, int max_level, std::uint64_t probes, Rng& rng) {
  if (max_level < 1) throw InvalidInput("vertex homotopies need levels up to at least 1");
  SimplicialReport out;
  out.ring = ring->label();
  out.max_level = max_level;
  const VarId x = fresh_var("x", {});
  auto elem = [&](Rng& g, int n) { return random_simplex_elem(ring, n, g, 2, 4, x); };

  out.families.push_back(tally("d_k h_v(i) = h_v(d_k i) d_k", probes, rng, [&](Rng& g) -> std::string {
    const int n = pick(g, 1, max_level), k = pick(g, 0, n), i = pick(g, -1, n);
    Poly p = elem(g, n);
    if (face(contraction_map(p, x, n, i), n, k) == contraction_map(face(p, n, k), x, n - 1, face_of_vertex(i, k)))
      return "";
    return describe("face", n, i, k, p);
  }));
  out.families.push_back(tally("s_k h_v(i) = h_v(s_k i) s_k", probes, rng, [&](Rng& g) -> std::string {
    const int n = pick(g, 0, max_level), k = pick(g, 0, n), i = pick(g, -1, n);
    Poly p = elem(g, n);
    if (degeneracy(contraction_map(p, x, n, i), n, k) ==
        contraction_map(degeneracy(p, n, k), x, n + 1, degeneracy_of_vertex(i, k)))
      return "";
    return describe("degeneracy", n, i, k, p);
  }));
  // On Delta^1, h = h_v(0): d_1 h is the identity and d_0 h is x = 0 followed by the inclusion.
  out.families.push_back(tally("endpoints of Delta^1", probes, rng, [&](Rng& g) -> std::string {
    Poly p = random_poly(ring, {x}, 3, 4, g);
    Poly h = contraction_map(p, x, 1, 0);
    if (face(h, 1, 1) == p && face(h, 1, 0) == p.eval(x, 0)) return "";
    return describe("endpoints", 1, 0, 0, p);
  }));
  return out;
}

}  // namespace hotring
