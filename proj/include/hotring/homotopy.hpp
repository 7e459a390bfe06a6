#pragma once

// Elementary homotopies between homomorphisms of finite rings: certificates,
// their verification, bounded search, chains, and the resulting partition of
// Hom(R, S) into classes that refine the true homotopy classes.

#include "hotring/homs.hpp"
#include "hotring/poly.hpp"
#include "hotring/virtual.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hotring {

/// h: S -> R[x] given on generators, with claimed endpoints f0 = d0 h, f1 = d1 h.
struct HomotopyCertificate {
  RingHom f0, f1;
  VarId var;
  std::vector<Poly> images;

  /// h applied to an arbitrary element of S.
  Poly apply(const RingElem& s) const;
};

struct CertificateCheck {
  bool ok = true;
  std::string failure;
};

/// Checks additive orders, multiplicativity on generator pairs and both endpoints.
CertificateCheck verify_certificate(const HomotopyCertificate& c);

/// h(x) = f for every x.
HomotopyCertificate constant_certificate(const RingHom& f, VarId v);
/// The same homotopy run backwards: x |-> 1 - x.
HomotopyCertificate reverse(const HomotopyCertificate& c);
/// h o f for f: R -> S, a homotopy g0 f ~ g1 f.
HomotopyCertificate precompose(const HomotopyCertificate& c, const RingHom& f);
/// k[x] o h for k: T -> U, a homotopy k g0 ~ k g1.
HomotopyCertificate postcompose(const RingHom& k, const HomotopyCertificate& c);

/// A certificate between maps of intensional rings, checked on probes.
struct VirtualCertificate {
  VirtualHom h;  // S -> R[y]
  VirtualHom f0, f1;
  VarId var;
};
CertificateCheck verify_certificate(const VirtualCertificate& c, const std::vector<VElem>& probe_set);

struct SearchResult {
  std::optional<HomotopyCertificate> certificate;
  unsigned degree_bound = 0;
  std::uint64_t searched = 0;  // candidates examined
};

/// Looks for h of degree <= d with the given endpoints, by increasing degree.
/// Coefficients of x^1..x^(d-1) range over elements killed by the generator's
/// order; the top coefficient is forced by the x = 1 endpoint. Throws
/// BudgetExceeded when the candidate count at some degree exceeds cap.
SearchResult search_elementary(const RingHom& f0, const RingHom& f1, unsigned d, std::uint64_t cap = 1u << 22,
                               VarId v = var("x"));

/// Deterministic union-find: the root of a class is its smallest member.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t i);
  bool unite(std::size_t a, std::size_t b);
  /// Class label per element, numbered by first appearance.
  std::vector<std::size_t> labels();

 private:
  std::vector<std::size_t> parent_;
};

using HomotopyChain = std::vector<HomotopyCertificate>;
/// Chain links verify and consecutive endpoints agree (empty chains link f to f).
CertificateCheck verify_chain(const HomotopyChain& chain, const RingHom& from, const RingHom& to);

struct Merge {
  std::size_t from, to;  // indices into homs
  HomotopyCertificate certificate;
};

struct HomotopyClasses {
  std::vector<RingHom> homs;        // lexicographic order
  std::vector<std::size_t> label;   // class per hom
  std::size_t class_count = 0;
  std::vector<Merge> merges;        // certificates that built the partition
  unsigned degree_bound = 0;
  std::uint64_t searched = 0;
  bool all_pairs = true;            // false when only class representatives were compared

  /// Chain from homs[i] to homs[j] through the merge forest (same class only).
  std::optional<HomotopyChain> chain(std::size_t i, std::size_t j) const;
};

/// Union-find over elementary homotopies of degree <= d. Every pair is tried
/// when |Hom| <= pair_limit; above it each hom is compared with the current
/// class representatives only, which can only leave classes finer.
HomotopyClasses homotopy_classes(const RingPtr& r, const RingPtr& s, unsigned d, std::uint64_t hom_cap = 1u << 20,
                                 std::uint64_t search_cap = 1u << 20, std::size_t pair_limit = 256);

struct EquivalenceResult {
  std::optional<RingHom> inverse;
  HomotopyChain fg_to_id, gf_to_id;
  std::uint64_t candidates = 0;
};

/// Looks for g: S -> R with f g ~ id_S and g f ~ id_R through chains of length
/// <= chain_cap in the degree-d partitions.
EquivalenceResult search_homotopy_equivalence(const RingHom& f, unsigned d, std::size_t chain_cap = 4);

}  // namespace hotring
