#pragma once

// Finite nonunital associative rings given by generator orders and structure
// constants, their elements, and homomorphisms between them.
//
// A ring with k generators g_1..g_k is the abelian group Z/d_1 + ... + Z/d_k with
// the bilinear product determined by g_i * g_j. Bilinearity makes generator
// triples sufficient for associativity and generator pairs sufficient for
// multiplicativity of a hom; both are checked at construction.

#include "hotring/errors.hpp"
#include "hotring/intmatrix.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace hotring {

using Coord = std::int64_t;
using Rng = std::mt19937_64;

struct RingElem {
  std::vector<Coord> coords;

  friend auto operator<=>(const RingElem&, const RingElem&) = default;
  friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// Unvalidated structure-constant data as read from JSON.
struct RawRing {
  std::string label;
  std::vector<Coord> orders;
  std::vector<std::vector<std::vector<Coord>>> mul;  // mul[i][j] = coords of g_i * g_j
  std::optional<std::vector<Coord>> unit;
};

class FiniteRing {
 public:
  const std::string& label() const { return label_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<Coord>& orders() const { return orders_; }
  Coord order(std::size_t i) const { return orders_[i]; }
  /// Number of elements, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  const std::optional<RingElem>& unit() const { return unit_; }

  RingElem zero() const { return RingElem{std::vector<Coord>(rank(), 0)}; }
  RingElem generator(std::size_t i) const;
  const RingElem& generator_product(std::size_t i, std::size_t j) const { return products_[i * rank() + j]; }

  RingElem reduce(std::vector<Coord> coords) const;
  RingElem reduce(const std::vector<BigInt>& coords) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem scale(const RingElem& a, std::int64_t c) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  bool is_zero(const RingElem& a) const;
  bool contains(const RingElem& a) const;  // canonical coordinates of the right length

  /// Mixed-radix index in [0, size()); only meaningful when size() fits.
  std::uint64_t index_of(const RingElem& a) const;
  RingElem element_at(std::uint64_t index) const;
  /// All elements in index order. Throws BudgetExceeded above cap.
  std::vector<RingElem> elements(std::uint64_t cap = 1u << 22) const;
  RingElem random_element(Rng& rng) const;

  std::string format(const RingElem& a) const;
  RawRing raw() const;

 private:
  friend std::shared_ptr<const FiniteRing> validate_ring(const RawRing& raw);
  FiniteRing() = default;

  std::string label_;
  std::vector<Coord> orders_;
  std::vector<RingElem> products_;
  std::optional<RingElem> unit_;
  std::uint64_t size_ = 1;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Checks shapes, order compatibility, associativity on generator triples and
/// the unit axiom. Throws InvalidInput, IllDefined or NotAssociative.
RingPtr validate_ring(const RawRing& raw);

class RingHom {
 public:
  /// Throws VerificationFailure when additive orders or multiplicativity fail.
  RingHom(RingPtr source, RingPtr target, std::vector<RingElem> images);

  static RingHom identity(const RingPtr& r);
  static RingHom zero(const RingPtr& source, const RingPtr& target);

  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<RingElem>& images() const { return images_; }

  RingElem operator()(const RingElem& a) const;
  bool is_surjective() const;
  bool is_injective() const;

  friend bool operator==(const RingHom& a, const RingHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
  }
  friend auto operator<=>(const RingHom& a, const RingHom& b) { return a.images_ <=> b.images_; }

  std::string format() const;

 private:
  RingPtr source_, target_;
  std::vector<RingElem> images_;
};

/// g after f.
RingHom compose(const RingHom& g, const RingHom& f);

/// Why (gens, images) fails to define a hom, or nullopt if it does.
std::optional<std::string> hom_defect(const FiniteRing& source, const FiniteRing& target,
                                      const std::vector<RingElem>& images);

/// Same presentation (orders and structure constants); labels are ignored.
bool same_ring(const FiniteRing& a, const FiniteRing& b);
bool is_commutative(const FiniteRing& r);
/// Smallest c with A^c = 0, or nullopt when the power chain stabilizes above 0.
std::optional<int> nilpotency_class(const FiniteRing& r);
/// No nonzero nilpotent elements (enumerates the ring).
bool is_reduced(const FiniteRing& r);
/// Multiplicative inverse of a when the ring has a unit and a is invertible.
std::optional<RingElem> inverse(const FiniteRing& r, const RingElem& a);

}  // namespace hotring
