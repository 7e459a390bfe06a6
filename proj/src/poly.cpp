#include "hotring/poly.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace hotring {

namespace {

struct VarRegistry {
  std::mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

VarRegistry& registry() {
  static VarRegistry r;
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in polynomial coefficient");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in polynomial coefficient");
  return r;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !same_ring(*a, *b))
    throw InvalidInput("polynomials over different rings: " + a->label() + " vs " + b->label());
}

}  // namespace

VarId var(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::string key(name);
  if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  if (r.names.size() >= 0xFFFF) throw Error("too many variables");
  VarId id = VarId(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return id;
}

const std::string& var_name(VarId v) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (v >= r.names.size()) throw UnknownVariable("unknown variable id " + std::to_string(v));
  return r.names[v];
}

VarId fresh_var(std::string_view stem, const std::set<VarId>& avoid) {
  VarId v = var(stem);
  for (int i = 1; avoid.count(v); ++i) v = var(std::string(stem) + std::to_string(i));
  return v;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(VarId v, unsigned exponent) {
  Monomial m;
  return m.with(v, exponent);
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

Monomial Monomial::without(VarId v) const { return with(v, 0); }

Monomial Monomial::with(VarId v, unsigned exponent) const {
  Monomial m = *this;
  if (m.exps_.size() <= v) {
    if (exponent == 0) return m;
    m.exps_.resize(std::size_t(v) + 1, 0);
  }
  if (exponent > 0xFFFF) throw Error("exponent overflow");
  m.exps_[v] = std::uint16_t(exponent);
  m.trim();
  return m;
}

std::set<VarId> Monomial::vars() const {
  std::set<VarId> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i]) out.insert(VarId(i));
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  const auto& big = a.exps_.size() >= b.exps_.size() ? a.exps_ : b.exps_;
  const auto& small = a.exps_.size() >= b.exps_.size() ? b.exps_ : a.exps_;
  m.exps_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) {
    unsigned e = unsigned(m.exps_[i]) + small[i];
    if (e > 0xFFFF) throw Error("exponent overflow");
    m.exps_[i] = std::uint16_t(e);
  }
  return m;
}

std::string Monomial::format() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (!exps_[i]) continue;
    if (!out.empty()) out += "*";
    out += var_name(VarId(i));
    if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::int64_t c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

IntPoly IntPoly::variable(VarId v) { return term(1, Monomial::of(v)); }

IntPoly IntPoly::term(std::int64_t c, Monomial m) {
  IntPoly p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

void IntPoly::add_term(const Monomial& m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::set<VarId> IntPoly::vars() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    auto v = m.vars();
    out.insert(v.begin(), v.end());
  }
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked_mul(c, -1));
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, checked_mul(ca, cb));
  return out;
}

IntPoly IntPoly::pow(unsigned n) const {
  IntPoly out(1), base = *this;
  while (n) {
    if (n & 1u) out = out * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return out;
}

IntPoly IntPoly::substitute(const std::map<VarId, IntPoly>& assignment) const {
  IntPoly out;
  for (const auto& [m, c] : terms_) {
    IntPoly t = IntPoly::term(c, Monomial{});
    Monomial rest = m;
    for (const auto& [v, q] : assignment) {
      unsigned e = m.degree(v);
      if (!e) continue;
      rest = rest.without(v);
      t = t * q.pow(e);
    }
    out += t * IntPoly::term(1, rest);
  }
  return out;
}

std::string IntPoly::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c);
    if (!m.is_one()) out += "*" + m.format();
  }
  return out;
}

IntPoly loop_factor(VarId v) { return IntPoly::term(1, Monomial::of(v, 2)) - IntPoly::variable(v); }

// ---------------------------------------------------------------- Poly

Poly Poly::constant(RingPtr ring, const RingElem& c) { return term(std::move(ring), c, Monomial{}); }

Poly Poly::term(RingPtr ring, const RingElem& c, Monomial m) {
  Poly p(std::move(ring));
  if (!p.ring_->contains(c)) throw InvalidInput("coefficient is not an element of " + p.ring_->label());
  p.add_term(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const RingElem& c) {
  if (ring_->is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = ring_->add(it->second, c);
    if (ring_->is_zero(it->second)) terms_.erase(it);
  }
}

std::set<VarId> Poly::vars() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_) {
    auto v = m.vars();
    out.insert(v.begin(), v.end());
  }
  return out;
}

unsigned Poly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

RingElem Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? ring_->zero() : it->second;
}

Poly Poly::coefficient(VarId v, unsigned e) const {
  Poly out(ring_);
  for (const auto& [m, c] : terms_)
    if (m.degree(v) == e) out.add_term(m.without(v), c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(ring_, o.ring_);
  for (const auto& [m, c] : o.terms_) add_term(m, ring_->neg(c));
  return *this;
}

Poly operator-(const Poly& a) {
  Poly out(a.ring_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, a.ring_->neg(c));
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring_, b.ring_);
  Poly out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.ring_->mul(ca, cb));
  return out;
}

Poly operator*(const IntPoly& q, const Poly& p) {
  Poly out(p.ring_);
  for (const auto& [mq, cq] : q.terms())
    for (const auto& [mp, cp] : p.terms_) out.add_term(mq * mp, p.ring_->scale(cp, cq));
  return out;
}

Poly Poly::scale(std::int64_t c) const {
  Poly out(ring_);
  for (const auto& [m, x] : terms_) out.add_term(m, ring_->scale(x, c));
  return out;
}

Poly Poly::times_monomial(const Monomial& mono) const {
  Poly out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m * mono, c);
  return out;
}

Poly Poly::eval(VarId v, int value) const {
  if (value != 0 && value != 1) throw InvalidInput("endpoint evaluation takes 0 or 1");
  var_name(v);  // UnknownVariable for ids that were never declared
  Poly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.degree(v) == 0)
      out.add_term(m, c);
    else if (value == 1)
      out.add_term(m.without(v), c);
  }
  return out;
}

Poly Poly::substitute(const std::map<VarId, IntPoly>& assignment) const {
  for (const auto& [v, q] : assignment) var_name(v);
  Poly out(ring_);
  std::map<std::pair<VarId, unsigned>, IntPoly> powers;
  auto power = [&](VarId v, const IntPoly& q, unsigned e) -> const IntPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, q.pow(e)).first;
    return it->second;
  };
  for (const auto& [m, c] : terms_) {
    IntPoly factor(1);
    Monomial rest = m;
    for (const auto& [v, q] : assignment) {
      unsigned e = m.degree(v);
      if (!e) continue;
      rest = rest.without(v);
      factor = factor * power(v, q, e);
    }
    for (const auto& [mf, cf] : factor.terms()) out.add_term(mf * rest, ring_->scale(c, cf));
  }
  return out;
}

Poly Poly::rename(VarId from, VarId to) const {
  if (from == to) return *this;
  Poly out(ring_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree(from);
    if (!e) {
      out.add_term(m, c);
      continue;
    }
    Monomial moved = m.without(from);
    out.add_term(moved * Monomial::of(to, e), c);
  }
  return out;
}

Poly Poly::map_coefficients(const RingHom& f) const {
  require_same_ring(ring_, f.source());
  Poly out(f.target());
  for (const auto& [m, c] : terms_) out.add_term(m, f(c));
  return out;
}

std::pair<Poly, Poly> Poly::divide_monic(VarId v, const IntPoly& divisor) const {
  unsigned dd = 0;
  for (const auto& [m, c] : divisor.terms()) {
    if (m.vars().size() > 1 || (!m.is_one() && !m.vars().count(v)))
      throw InvalidInput("divisor must be univariate in the division variable");
    dd = std::max(dd, m.degree(v));
  }
  auto lead = divisor.terms().find(Monomial::of(v, dd));
  if (lead == divisor.terms().end() || lead->second != 1) throw InvalidInput("divisor must be monic");
  Poly quotient(ring_), rem = *this;
  for (;;) {
    unsigned d = rem.degree(v);
    if (rem.is_zero() || d < dd) break;
    Poly top = rem.coefficient(v, d);
    Monomial shift = Monomial::of(v, d - dd);
    quotient += top.times_monomial(shift);
    rem -= (divisor * top).times_monomial(shift);
  }
  return {std::move(quotient), std::move(rem)};
}

std::string Poly::format() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += ring_->format(c);
    if (!m.is_one()) out += "*" + m.format();
  }
  return out;
}

Poly random_poly(const RingPtr& ring, const std::vector<VarId>& vars, unsigned max_degree, unsigned max_terms,
                 Rng& rng) {
  Poly p(ring);
  const unsigned terms = unsigned(rng() % (max_terms + 1));
  for (unsigned t = 0; t < terms; ++t) {
    Monomial m;
    for (VarId v : vars) m = m.with(v, unsigned(rng() % (max_degree + 1)));
    p += Poly::term(ring, ring->random_element(rng), m);
  }
  return p;
}

}  // namespace hotring
