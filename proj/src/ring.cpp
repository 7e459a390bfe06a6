#include "hotring/ring.hpp"

#include <limits>
#include <set>
#include <sstream>

namespace hotring {

namespace {

constexpr Coord kMaxOrder = Coord(1) << 31;

Coord mod_coord(__int128 v, Coord d) {
  __int128 r = v % d;
  if (r < 0) r += d;
  return static_cast<Coord>(r);
}

std::string coords_string(const std::vector<Coord>& c) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

}  // namespace

RingElem FiniteRing::generator(std::size_t i) const {
  if (i >= rank()) throw IndexOutOfRange("generator index " + std::to_string(i) + " out of range");
  RingElem e = zero();
  e.coords[i] = 1 % orders_[i];
  return e;
}

RingElem FiniteRing::reduce(std::vector<Coord> coords) const {
  if (coords.size() != rank()) throw InvalidInput("element has " + std::to_string(coords.size()) +
                                                  " coordinates, ring " + label_ + " has rank " +
                                                  std::to_string(rank()));
  for (std::size_t i = 0; i < rank(); ++i) coords[i] = mod_coord(coords[i], orders_[i]);
  return RingElem{std::move(coords)};
}

RingElem FiniteRing::reduce(const std::vector<BigInt>& coords) const {
  if (coords.size() != rank()) throw InvalidInput("element has wrong number of coordinates for " + label_);
  RingElem e = zero();
  for (std::size_t i = 0; i < rank(); ++i) e.coords[i] = static_cast<Coord>(mod_floor(coords[i], orders_[i]));
  return e;
}

RingElem FiniteRing::add(const RingElem& a, const RingElem& b) const {
  RingElem c = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    c.coords[i] += b.coords[i];
    if (c.coords[i] >= orders_[i]) c.coords[i] -= orders_[i];
  }
  return c;
}

RingElem FiniteRing::neg(const RingElem& a) const {
  RingElem c = a;
  for (std::size_t i = 0; i < rank(); ++i)
    if (c.coords[i] != 0) c.coords[i] = orders_[i] - c.coords[i];
  return c;
}

RingElem FiniteRing::sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

RingElem FiniteRing::scale(const RingElem& a, std::int64_t c) const {
  RingElem out = a;
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = mod_coord(__int128(a.coords[i]) * c, orders_[i]);
  return out;
}

RingElem FiniteRing::mul(const RingElem& a, const RingElem& b) const {
  const std::size_t k = rank();
  std::vector<__int128> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b.coords[j] == 0) continue;
      const __int128 ab = __int128(a.coords[i]) * b.coords[j];
      const auto& p = products_[i * k + j].coords;
      for (std::size_t l = 0; l < k; ++l)
        if (p[l] != 0) acc[l] = (acc[l] + ab * p[l]) % orders_[l];
    }
  }
  RingElem out = zero();
  for (std::size_t l = 0; l < k; ++l) out.coords[l] = mod_coord(acc[l], orders_[l]);
  return out;
}

bool FiniteRing::is_zero(const RingElem& a) const {
  for (Coord c : a.coords)
    if (c != 0) return false;
  return true;
}

bool FiniteRing::contains(const RingElem& a) const {
  if (a.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (a.coords[i] < 0 || a.coords[i] >= orders_[i]) return false;
  return true;
}

std::uint64_t FiniteRing::index_of(const RingElem& a) const {
  std::uint64_t idx = 0;
  for (std::size_t i = rank(); i-- > 0;) idx = idx * std::uint64_t(orders_[i]) + std::uint64_t(a.coords[i]);
  return idx;
}

RingElem FiniteRing::element_at(std::uint64_t index) const {
  RingElem e = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    e.coords[i] = Coord(index % std::uint64_t(orders_[i]));
    index /= std::uint64_t(orders_[i]);
  }
  return e;
}

std::vector<RingElem> FiniteRing::elements(std::uint64_t cap) const {
  if (size_ > cap) throw BudgetExceeded("enumerating " + label_, size_, cap);
  std::vector<RingElem> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element_at(i));
  return out;
}

RingElem FiniteRing::random_element(Rng& rng) const {
  RingElem e = zero();
  for (std::size_t i = 0; i < rank(); ++i) e.coords[i] = Coord(rng() % std::uint64_t(orders_[i]));
  return e;
}

std::string FiniteRing::format(const RingElem& a) const { return coords_string(a.coords); }

RawRing FiniteRing::raw() const {
  RawRing r;
  r.label = label_;
  r.orders = orders_;
  r.mul.assign(rank(), std::vector<std::vector<Coord>>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) r.mul[i][j] = generator_product(i, j).coords;
  if (unit_) r.unit = unit_->coords;
  return r;
}

RingPtr validate_ring(const RawRing& raw) {
  const std::size_t k = raw.orders.size();
  auto ring = std::shared_ptr<FiniteRing>(new FiniteRing());
  ring->label_ = raw.label;
  for (Coord d : raw.orders)
    if (d <= 0 || d > kMaxOrder) throw InvalidInput("generator orders must lie in [1, 2^31]");
  // Trivial generators (order 1) carry no information but are kept so that user
  // coordinates stay as written.
  ring->orders_ = raw.orders;
  ring->size_ = 1;
  for (Coord d : raw.orders) {
    if (ring->size_ > std::numeric_limits<std::uint64_t>::max() / std::uint64_t(d))
      ring->size_ = std::numeric_limits<std::uint64_t>::max();
    else
      ring->size_ *= std::uint64_t(d);
  }
  if (raw.mul.size() != k) throw InvalidInput("structure constant table must be k x k x k");
  ring->products_.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (raw.mul[i].size() != k) throw InvalidInput("structure constant table must be k x k x k");
    for (std::size_t j = 0; j < k; ++j) {
      if (raw.mul[i][j].size() != k) throw InvalidInput("structure constant table must be k x k x k");
      ring->products_.push_back(ring->reduce(raw.mul[i][j]));
    }
  }
  // d_i * (g_i g_j) = 0 and d_j * (g_i g_j) = 0
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const RingElem& p = ring->generator_product(i, j);
      if (!ring->is_zero(ring->scale(p, raw.orders[i])))
        throw IllDefined(int(i), int(j), std::to_string(raw.orders[i]) + "*(g_i g_j) != 0");
      if (!ring->is_zero(ring->scale(p, raw.orders[j])))
        throw IllDefined(int(i), int(j), std::to_string(raw.orders[j]) + "*(g_i g_j) != 0");
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        RingElem left = ring->mul(ring->generator_product(i, j), ring->generator(l));
        RingElem right = ring->mul(ring->generator(i), ring->generator_product(j, l));
        if (left != right)
          throw NotAssociative(int(i), int(j), int(l), coords_string(left.coords), coords_string(right.coords));
      }
  if (raw.unit) {
    RingElem e = ring->reduce(*raw.unit);
    for (std::size_t i = 0; i < k; ++i) {
      RingElem g = ring->generator(i);
      if (ring->mul(e, g) != g || ring->mul(g, e) != g)
        throw InvalidInput("claimed unit " + coords_string(e.coords) + " fails e*g = g*e = g on generator " +
                           std::to_string(i));
    }
    ring->unit_ = e;
  }
  return ring;
}

std::optional<std::string> hom_defect(const FiniteRing& source, const FiniteRing& target,
                                      const std::vector<RingElem>& images) {
  if (images.size() != source.rank()) return "expected one image per source generator";
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!target.contains(images[i])) return "image " + std::to_string(i) + " is not a canonical target element";
    if (!target.is_zero(target.scale(images[i], source.order(i))))
      return "additive order of generator " + std::to_string(i) + " not respected";
  }
  auto apply = [&](const RingElem& a) {
    RingElem out = target.zero();
    for (std::size_t i = 0; i < a.coords.size(); ++i)
      if (a.coords[i] != 0) out = target.add(out, target.scale(images[i], a.coords[i]));
    return out;
  };
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < images.size(); ++j)
      if (apply(source.generator_product(i, j)) != target.mul(images[i], images[j]))
        return "not multiplicative on generators " + std::to_string(i) + "," + std::to_string(j);
  return std::nullopt;
}

RingHom::RingHom(RingPtr source, RingPtr target, std::vector<RingElem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (auto why = hom_defect(*source_, *target_, images_))
    throw VerificationFailure("not a ring hom " + source_->label() + " -> " + target_->label() + ": " + *why);
}

RingHom RingHom::identity(const RingPtr& r) {
  std::vector<RingElem> imgs;
  for (std::size_t i = 0; i < r->rank(); ++i) imgs.push_back(r->generator(i));
  return RingHom(r, r, std::move(imgs));
}

RingHom RingHom::zero(const RingPtr& source, const RingPtr& target) {
  return RingHom(source, target, std::vector<RingElem>(source->rank(), target->zero()));
}

RingElem RingHom::operator()(const RingElem& a) const {
  RingElem out = target_->zero();
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] != 0) out = target_->add(out, target_->scale(images_[i], a.coords[i]));
  return out;
}

bool RingHom::is_surjective() const {
  std::set<RingElem> seen;
  for (const RingElem& a : source_->elements()) seen.insert((*this)(a));
  return seen.size() == target_->size();
}

bool RingHom::is_injective() const {
  for (const RingElem& a : source_->elements())
    if (!source_->is_zero(a) && target_->is_zero((*this)(a))) return false;
  return true;
}

std::string RingHom::format() const {
  std::ostringstream os;
  os << source_->label() << " -> " << target_->label() << " {";
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? ", " : "") << "g" << i << "->" << coords_string(images_[i].coords);
  os << "}";
  return os.str();
}

RingHom compose(const RingHom& g, const RingHom& f) {
  if (!same_ring(*f.target(), *g.source())) throw InvalidInput("compose: target of f is not source of g");
  std::vector<RingElem> imgs;
  for (const RingElem& x : f.images()) imgs.push_back(g(x));
  return RingHom(f.source(), g.target(), std::move(imgs));
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) {
  if (&a == &b) return true;
  if (a.orders() != b.orders()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      if (a.generator_product(i, j) != b.generator_product(i, j)) return false;
  return true;
}

bool is_commutative(const FiniteRing& r) {
  for (std::size_t i = 0; i < r.rank(); ++i)
    for (std::size_t j = i + 1; j < r.rank(); ++j)
      if (r.generator_product(i, j) != r.generator_product(j, i)) return false;
  return true;
}

namespace {

// Additive subgroup generated by gens, as an element set.
std::set<RingElem> span(const FiniteRing& r, const std::vector<RingElem>& gens) {
  std::set<RingElem> out{r.zero()};
  std::vector<RingElem> frontier{r.zero()};
  while (!frontier.empty()) {
    std::vector<RingElem> next;
    for (const RingElem& a : frontier)
      for (const RingElem& g : gens) {
        RingElem b = r.add(a, g);
        if (out.insert(b).second) next.push_back(std::move(b));
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::optional<int> nilpotency_class(const FiniteRing& r) {
  std::vector<RingElem> gens;
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.generator(i));
  std::set<RingElem> power = span(r, gens);
  for (int c = 1;; ++c) {
    if (power.size() == 1) return c;
    std::vector<RingElem> prods;
    std::set<RingElem> uniq;
    for (const RingElem& a : power)
      for (const RingElem& g : gens) {
        RingElem p = r.mul(a, g);
        if (!r.is_zero(p) && uniq.insert(p).second) prods.push_back(p);
      }
    std::set<RingElem> next = span(r, prods);
    if (next.size() == power.size()) return std::nullopt;
    power = std::move(next);
  }
}

bool is_reduced(const FiniteRing& r) {
  for (const RingElem& a : r.elements()) {
    if (r.is_zero(a)) continue;
    std::set<RingElem> seen;
    RingElem p = a;
    while (!r.is_zero(p) && seen.insert(p).second) p = r.mul(p, a);
    if (r.is_zero(p)) return false;
  }
  return true;
}

std::optional<RingElem> inverse(const FiniteRing& r, const RingElem& a) {
  if (!r.unit()) return std::nullopt;
  for (const RingElem& b : r.elements())
    if (r.mul(a, b) == *r.unit() && r.mul(b, a) == *r.unit()) return b;
  return std::nullopt;
}

}  // namespace hotring
