#include "hotring/virtual.hpp"

#include "hotring/unital.hpp"

#include <sstream>

namespace hotring {

// ---------------------------------------------------------------- VElem

VElem VElem::leaf(Poly p) {
  VElem e;
  e.kind_ = Kind::Leaf;
  e.leaf_.emplace(std::move(p));
  return e;
}

VElem VElem::pair(VElem a, VElem b) {
  VElem e;
  e.kind_ = Kind::Pair;
  e.parts_.push_back(std::move(a));
  e.parts_.push_back(std::move(b));
  return e;
}

VElem VElem::unital(BigInt n, VElem a) {
  VElem e;
  e.kind_ = Kind::Unital;
  e.n_ = std::move(n);
  e.parts_.push_back(std::move(a));
  return e;
}

const Poly& VElem::poly() const {
  if (kind_ != Kind::Leaf) throw InvalidInput("element is not a polynomial leaf");
  return *leaf_;
}

const VElem& VElem::first() const {
  if (kind_ != Kind::Pair) throw InvalidInput("element is not a pair");
  return parts_[0];
}

const VElem& VElem::second() const {
  if (kind_ != Kind::Pair) throw InvalidInput("element is not a pair");
  return parts_[1];
}

const BigInt& VElem::integer() const {
  if (kind_ != Kind::Unital) throw InvalidInput("element is not in a unitalization");
  return n_;
}

const VElem& VElem::augment() const {
  if (kind_ != Kind::Unital) throw InvalidInput("element is not in a unitalization");
  return parts_[0];
}

namespace {

void require_same_shape(const VElem& a, const VElem& b) {
  if (a.kind() != b.kind()) throw InvalidInput("elements of differently shaped rings");
}

}  // namespace

bool VElem::is_zero() const {
  switch (kind_) {
    case Kind::Leaf:
      return leaf_->is_zero();
    case Kind::Pair:
      return parts_[0].is_zero() && parts_[1].is_zero();
    case Kind::Unital:
      return n_ == 0 && parts_[0].is_zero();
  }
  return false;
}

std::set<VarId> VElem::vars() const {
  if (kind_ == Kind::Leaf) return leaf_->vars();
  std::set<VarId> out;
  for (const VElem& p : parts_) {
    auto v = p.vars();
    out.insert(v.begin(), v.end());
  }
  return out;
}

VElem operator+(const VElem& a, const VElem& b) {
  require_same_shape(a, b);
  switch (a.kind_) {
    case VElem::Kind::Leaf:
      return VElem::leaf(*a.leaf_ + *b.leaf_);
    case VElem::Kind::Pair:
      return VElem::pair(a.parts_[0] + b.parts_[0], a.parts_[1] + b.parts_[1]);
    case VElem::Kind::Unital:
      return VElem::unital(a.n_ + b.n_, a.parts_[0] + b.parts_[0]);
  }
  return a;
}

VElem operator-(const VElem& a) {
  switch (a.kind_) {
    case VElem::Kind::Leaf:
      return VElem::leaf(-*a.leaf_);
    case VElem::Kind::Pair:
      return VElem::pair(-a.parts_[0], -a.parts_[1]);
    case VElem::Kind::Unital:
      return VElem::unital(-a.n_, -a.parts_[0]);
  }
  return a;
}

VElem operator-(const VElem& a, const VElem& b) { return a + (-b); }

VElem operator*(const VElem& a, const VElem& b) {
  require_same_shape(a, b);
  switch (a.kind_) {
    case VElem::Kind::Leaf:
      return VElem::leaf(*a.leaf_ * *b.leaf_);
    case VElem::Kind::Pair:
      return VElem::pair(a.parts_[0] * b.parts_[0], a.parts_[1] * b.parts_[1]);
    case VElem::Kind::Unital: {
      // (n,a)(m,b) = (nm, nb + ma + ab)
      const VElem& x = a.parts_[0];
      const VElem& y = b.parts_[0];
      return VElem::unital(a.n_ * b.n_, y.scale_big(a.n_) + x.scale_big(b.n_) + x * y);
    }
  }
  return a;
}

VElem operator*(const IntPoly& q, const VElem& a) {
  switch (a.kind_) {
    case VElem::Kind::Leaf:
      return VElem::leaf(q * *a.leaf_);
    case VElem::Kind::Pair:
      return VElem::pair(q * a.parts_[0], q * a.parts_[1]);
    case VElem::Kind::Unital: {
      if (!q.vars().empty()) throw InvalidInput("polynomial scalars do not act on a unitalization");
      std::int64_t c = q.is_zero() ? 0 : q.terms().begin()->second;
      return VElem::unital(a.n_ * c, q * a.parts_[0]);
    }
  }
  return a;
}

VElem VElem::scale_big(const BigInt& n) const {
  switch (kind_) {
    case Kind::Leaf: {
      const RingPtr& r = leaf_->ring();
      Poly out(r);
      for (const auto& [m, c] : leaf_->terms()) out += Poly::term(r, hotring::scale_big(*r, c, n), m);
      return VElem::leaf(std::move(out));
    }
    case Kind::Pair:
      return VElem::pair(parts_[0].scale_big(n), parts_[1].scale_big(n));
    case Kind::Unital:
      return VElem::unital(n_ * n, parts_[0].scale_big(n));
  }
  return *this;
}

VElem VElem::eval(VarId v, int value) const {
  switch (kind_) {
    case Kind::Leaf:
      return VElem::leaf(leaf_->eval(v, value));
    case Kind::Pair:
      return VElem::pair(parts_[0].eval(v, value), parts_[1].eval(v, value));
    case Kind::Unital:
      return VElem::unital(n_, parts_[0].eval(v, value));
  }
  return *this;
}

VElem VElem::substitute(const std::map<VarId, IntPoly>& assignment) const {
  switch (kind_) {
    case Kind::Leaf:
      return VElem::leaf(leaf_->substitute(assignment));
    case Kind::Pair:
      return VElem::pair(parts_[0].substitute(assignment), parts_[1].substitute(assignment));
    case Kind::Unital:
      return VElem::unital(n_, parts_[0].substitute(assignment));
  }
  return *this;
}

VElem VElem::rename(VarId from, VarId to) const {
  switch (kind_) {
    case Kind::Leaf:
      return VElem::leaf(leaf_->rename(from, to));
    case Kind::Pair:
      return VElem::pair(parts_[0].rename(from, to), parts_[1].rename(from, to));
    case Kind::Unital:
      return VElem::unital(n_, parts_[0].rename(from, to));
  }
  return *this;
}

VElem VElem::coefficient(VarId v, unsigned e) const {
  switch (kind_) {
    case Kind::Leaf:
      return VElem::leaf(leaf_->coefficient(v, e));
    case Kind::Pair:
      return VElem::pair(parts_[0].coefficient(v, e), parts_[1].coefficient(v, e));
    case Kind::Unital:
      return VElem::unital(e == 0 ? n_ : BigInt(0), parts_[0].coefficient(v, e));
  }
  return *this;
}

unsigned VElem::degree(VarId v) const {
  if (kind_ == Kind::Leaf) return leaf_->degree(v);
  unsigned d = 0;
  for (const VElem& p : parts_) d = std::max(d, p.degree(v));
  return d;
}

bool operator==(const VElem& a, const VElem& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case VElem::Kind::Leaf:
      return *a.leaf_ == *b.leaf_;
    case VElem::Kind::Pair:
      return a.parts_[0] == b.parts_[0] && a.parts_[1] == b.parts_[1];
    case VElem::Kind::Unital:
      return a.n_ == b.n_ && a.parts_[0] == b.parts_[0];
  }
  return false;
}

std::string VElem::format() const {
  switch (kind_) {
    case Kind::Leaf:
      return leaf_->format();
    case Kind::Pair:
      return "(" + parts_[0].format() + ", " + parts_[1].format() + ")";
    case Kind::Unital:
      return "(" + n_.str() + ", " + parts_[0].format() + ")";
  }
  return {};
}

// ---------------------------------------------------------------- VirtualHom

VirtualHom::VirtualHom(VRing source, VRing target, Fn fn, std::string name)
    : source_(std::move(source)), target_(std::move(target)), fn_(std::move(fn)), name_(std::move(name)) {
  if (!source_ || !target_ || !fn_) throw InvalidInput("incomplete homomorphism " + name_);
}

VirtualHom VirtualHom::from_ring_hom(const RingHom& f, const VRing& source, const VRing& target) {
  RingHom copy = f;
  return VirtualHom(
      source, target,
      [copy](const VElem& a) { return VElem::leaf(a.poly().map_coefficients(copy)); }, f.format());
}

VirtualHom VirtualHom::identity(const VRing& r) {
  return VirtualHom(r, r, [](const VElem& a) { return a; }, "id");
}

VirtualHom VirtualHom::zero(const VRing& source, const VRing& target) {
  VElem z = target->zero();
  return VirtualHom(source, target, [z](const VElem&) { return z; }, "0");
}

VElem VirtualHom::checked(const VElem& a) const {
  if (auto why = source_->membership_defect(a))
    throw MembershipViolation(name_ + ": argument not in " + source_->label() + ": " + *why);
  VElem b = fn_(a);
  if (auto why = target_->membership_defect(b))
    throw MembershipViolation(name_ + ": image not in " + target_->label() + ": " + *why);
  return b;
}

VirtualHom compose(const VirtualHom& g, const VirtualHom& f) {
  VirtualHom gc = g, fc = f;
  return VirtualHom(
      f.source(), g.target(), [gc, fc](const VElem& a) { return gc(fc(a)); }, g.name() + " o " + f.name());
}

// ---------------------------------------------------------------- VirtualRing

namespace {

// Pullback of finite rings given by virtual homs, used for sampling.
struct FinitePullbackSampler {
  std::shared_ptr<Pullback> pb;
  VElem operator()(Rng& rng, unsigned) const {
    RingElem e = pb->ring->random_element(rng);
    return VElem::pair(VElem::leaf(Poly::constant(pb->rho.target(), pb->rho(e))),
                       VElem::leaf(Poly::constant(pb->sigma.target(), pb->sigma(e))));
  }
};

RingHom finite_ring_hom(const VirtualHom& f) {
  const RingPtr& s = f.source()->ring();
  const RingPtr& t = f.target()->ring();
  std::vector<RingElem> images;
  for (std::size_t i = 0; i < s->rank(); ++i) {
    VElem img = f(f.source()->constant(s->generator(i)));
    images.push_back(img.poly().constant_term());
  }
  return RingHom(s, t, std::move(images));
}

}  // namespace

VRing VirtualRing::finite(RingPtr ring) {
  auto r = std::shared_ptr<VirtualRing>(new VirtualRing());
  r->kind_ = Kind::Finite;
  r->label_ = ring->label();
  r->ring_ = std::move(ring);
  return r;
}

VRing VirtualRing::poly(VRing base, VarId v, bool vanish0, bool vanish1, std::string label) {
  if (base->kind() == Kind::Unital) throw InvalidInput("polynomial extension of a unitalization is not supported");
  if (base->variables().count(v)) throw InvalidInput("variable " + var_name(v) + " already used in " + base->label());
  auto r = std::shared_ptr<VirtualRing>(new VirtualRing());
  r->kind_ = Kind::Poly;
  r->var_ = v;
  r->vanish0_ = vanish0;
  r->vanish1_ = vanish1;
  if (label.empty()) {
    std::string head = vanish0 && vanish1 ? "Omega" : vanish0 ? "E" : vanish1 ? "E'" : "";
    label = head.empty() ? base->label() + "[" + var_name(v) + "]" : head + "_" + var_name(v) + "(" + base->label() + ")";
  }
  r->label_ = std::move(label);
  r->base_ = std::move(base);
  return r;
}

VRing VirtualRing::pullback(VirtualHom f, VirtualHom g, Sampler sampler, std::string label) {
  auto r = std::shared_ptr<VirtualRing>(new VirtualRing());
  r->kind_ = Kind::Pullback;
  r->label_ = label.empty() ? f.source()->label() + " x_" + f.target()->label() + " " + g.source()->label()
                            : std::move(label);
  if (!sampler && f.source()->kind() == Kind::Finite && g.source()->kind() == Kind::Finite &&
      f.target()->kind() == Kind::Finite) {
    auto pb = std::make_shared<Pullback>(hotring::pullback(finite_ring_hom(f), finite_ring_hom(g)));
    sampler = FinitePullbackSampler{pb};
  }
  r->sampler_ = std::move(sampler);
  r->f_ = std::make_shared<VirtualHom>(std::move(f));
  r->g_ = std::make_shared<VirtualHom>(std::move(g));
  return r;
}

VRing VirtualRing::unitalization(VRing base) {
  auto r = std::shared_ptr<VirtualRing>(new VirtualRing());
  r->kind_ = Kind::Unital;
  r->label_ = base->label() + "+";
  r->base_ = std::move(base);
  return r;
}

const RingPtr& VirtualRing::ring() const {
  if (kind_ != Kind::Finite) throw InvalidInput(label_ + " is not a finite ring");
  return ring_;
}

const VRing& VirtualRing::base() const {
  if (kind_ != Kind::Poly && kind_ != Kind::Unital) throw InvalidInput(label_ + " has no base ring");
  return base_;
}

VarId VirtualRing::variable() const {
  if (kind_ != Kind::Poly) throw InvalidInput(label_ + " is not a polynomial extension");
  return var_;
}

const VirtualHom& VirtualRing::f() const {
  if (kind_ != Kind::Pullback) throw InvalidInput(label_ + " is not a fibre product");
  return *f_;
}

const VirtualHom& VirtualRing::g() const {
  if (kind_ != Kind::Pullback) throw InvalidInput(label_ + " is not a fibre product");
  return *g_;
}

VElem VirtualRing::zero() const {
  switch (kind_) {
    case Kind::Finite:
      return VElem::leaf(Poly(ring_));
    case Kind::Poly:
      return base_->zero();
    case Kind::Pullback:
      return VElem::pair(f_->source()->zero(), g_->source()->zero());
    case Kind::Unital:
      return VElem::unital(0, base_->zero());
  }
  return VElem::leaf(Poly(ring_));
}

VElem VirtualRing::constant(const RingElem& a) const { return VElem::leaf(Poly::constant(ring(), a)); }

std::optional<std::string> VirtualRing::membership_defect(const VElem& e, const std::set<VarId>& free) const {
  switch (kind_) {
    case Kind::Finite: {
      if (e.kind() != VElem::Kind::Leaf) return "expected an element of " + label_;
      const Poly& p = e.poly();
      if (p.ring() != ring_ && !same_ring(*p.ring(), *ring_)) return "coefficients from " + p.ring()->label();
      for (VarId v : p.vars())
        if (!free.count(v)) return "unexpected variable " + var_name(v) + " in " + label_;
      for (const auto& [m, c] : p.terms())
        if (!ring_->contains(c)) return "coefficient out of range in " + label_;
      return std::nullopt;
    }
    case Kind::Poly: {
      std::set<VarId> inner = free;
      inner.insert(var_);
      if (auto why = base_->membership_defect(e, inner)) return why;
      if (vanish0_ && !e.eval(var_, 0).is_zero()) return "nonzero value at " + var_name(var_) + " = 0 in " + label_;
      if (vanish1_ && !e.eval(var_, 1).is_zero()) return "nonzero value at " + var_name(var_) + " = 1 in " + label_;
      return std::nullopt;
    }
    case Kind::Pullback: {
      if (e.kind() != VElem::Kind::Pair) return "expected a pair in " + label_;
      if (auto why = f_->source()->membership_defect(e.first(), free)) return why;
      if (auto why = g_->source()->membership_defect(e.second(), free)) return why;
      if (!((*f_)(e.first()) == (*g_)(e.second())))
        return "components disagree over " + f_->target()->label() + " in " + label_;
      return std::nullopt;
    }
    case Kind::Unital: {
      if (e.kind() != VElem::Kind::Unital) return "expected (n, a) in " + label_;
      return base_->membership_defect(e.augment(), free);
    }
  }
  return "unknown ring kind";
}

void VirtualRing::require(const VElem& e) const {
  if (auto why = membership_defect(e)) throw MembershipViolation(*why);
}

VElem VirtualRing::random_element(Rng& rng, unsigned degree) const {
  switch (kind_) {
    case Kind::Finite:
      return constant(ring_->random_element(rng));
    case Kind::Poly: {
      const IntPoly x = IntPoly::variable(var_);
      VElem sum = base_->zero();
      if (vanish0_ && vanish1_) {
        // (x^2 - x) q(x) with deg q <= degree - 2
        for (unsigned e = 0; e + 2 <= std::max(degree, 2u); ++e)
          sum = sum + x.pow(e) * base_->random_element(rng, degree);
        return loop_factor(var_) * sum;
      }
      for (unsigned e = vanish0_ ? 1 : 0; e <= std::max(degree, 1u); ++e)
        sum = sum + x.pow(e) * base_->random_element(rng, degree);
      if (vanish1_) sum = sum - sum.eval(var_, 1);
      return sum;
    }
    case Kind::Pullback:
      if (!sampler_) throw InvalidInput("no sampler for " + label_);
      return sampler_(rng, degree);
    case Kind::Unital: {
      std::uniform_int_distribution<int> d(-5, 5);
      return VElem::unital(d(rng), base_->random_element(rng, degree));
    }
  }
  return zero();
}

std::set<VarId> VirtualRing::variables() const {
  std::set<VarId> out;
  switch (kind_) {
    case Kind::Finite:
      break;
    case Kind::Poly:
      out = base_->variables();
      out.insert(var_);
      break;
    case Kind::Unital:
      out = base_->variables();
      break;
    case Kind::Pullback:
      for (const VRing& r : {f_->source(), g_->source(), f_->target()}) {
        auto v = r->variables();
        out.insert(v.begin(), v.end());
      }
      break;
  }
  return out;
}

std::string VirtualRing::describe() const {
  switch (kind_) {
    case Kind::Finite:
      return label_;
    case Kind::Poly:
      return label_;
    case Kind::Pullback:
      return "(" + f_->source()->describe() + ") x_(" + f_->target()->describe() + ") (" + g_->source()->describe() +
             ")";
    case Kind::Unital:
      return base_->describe() + "+";
  }
  return label_;
}

VRing polynomial_ring(const VRing& base, VarId v) { return VirtualRing::poly(base, v, false, false); }

VRing path_ring(const VRing& base, std::string_view stem) {
  return VirtualRing::poly(base, fresh_var(stem, base->variables()), true, false);
}

VRing loop_ring(const VRing& base, std::string_view stem) {
  return VirtualRing::poly(base, fresh_var(stem, base->variables()), true, true);
}

VRing copath_ring(const VRing& base, std::string_view stem) {
  return VirtualRing::poly(base, fresh_var(stem, base->variables()), false, true);
}

VirtualHom evaluation(const VRing& poly_ring, int value) {
  const VarId v = poly_ring->variable();
  return VirtualHom(
      poly_ring, poly_ring->base(), [v, value](const VElem& a) { return a.eval(v, value); },
      "d" + std::to_string(value) + "_" + var_name(v));
}

VirtualHom forget_vanishing(const VRing& poly_ring, const VRing& full) {
  return VirtualHom(poly_ring, full, [](const VElem& a) { return a; }, "incl");
}

VirtualHom project_left(const VRing& pullback) {
  return VirtualHom(pullback, pullback->left(), [](const VElem& a) { return a.first(); }, "pr1");
}

VirtualHom project_right(const VRing& pullback) {
  return VirtualHom(pullback, pullback->right(), [](const VElem& a) { return a.second(); }, "pr2");
}

HomCheck check_hom(const VirtualHom& f, const std::vector<VElem>& probe_set, std::size_t all_pairs_limit) {
  HomCheck out;
  std::vector<VElem> images;
  images.reserve(probe_set.size());
  for (const VElem& a : probe_set) {
    if (auto why = f.source()->membership_defect(a)) {
      out.ok = false;
      out.failure = "probe " + a.format() + " not in source: " + *why;
      return out;
    }
    VElem b = f(a);
    if (auto why = f.target()->membership_defect(b)) {
      out.ok = false;
      out.failure = f.name() + "(" + a.format() + ") = " + b.format() + " not in target: " + *why;
      return out;
    }
    images.push_back(std::move(b));
  }
  auto check_pair = [&](std::size_t i, std::size_t j) {
    ++out.checked_pairs;
    const VElem& a = probe_set[i];
    const VElem& b = probe_set[j];
    if (!(f(a + b) == images[i] + images[j])) {
      out.ok = false;
      out.failure = "not additive on " + a.format() + " and " + b.format();
      return false;
    }
    if (!(f(a * b) == images[i] * images[j])) {
      out.ok = false;
      out.failure = "not multiplicative on " + a.format() + " and " + b.format();
      return false;
    }
    return true;
  };
  const std::size_t n = probe_set.size();
  if (n <= all_pairs_limit) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!check_pair(i, j)) return out;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (!check_pair(i, (i + 1) % n)) return out;
  }
  return out;
}

std::vector<VElem> probes(const VRing& r, std::size_t count, Rng& rng, unsigned degree) {
  std::vector<VElem> out;
  out.reserve(count);
  if (count > 0) out.push_back(r->zero());
  while (out.size() < count) out.push_back(r->random_element(rng, degree));
  return out;
}

// ---------------------------------------------------------------- finite models

FiniteModel finite_model(const VRing& r, int level) {
  switch (r->kind()) {
    case VirtualRing::Kind::Finite: {
      RingPtr ring = r->ring();
      return FiniteModel{
          ring,
          [ring](const VElem& e) {
            const Poly& p = e.poly();
            if (!p.vars().empty()) throw MembershipViolation("finite model: unexpected variable");
            return p.constant_term();
          },
          [ring](const RingElem& a) { return VElem::leaf(Poly::constant(ring, a)); }};
    }
    case VirtualRing::Kind::Poly: {
      if (!r->vanish0()) throw InvalidInput("finite model needs vanishing at 0: " + r->label());
      FiniteModel base = finite_model(r->base(), level);
      auto path = std::make_shared<TruncatedPathRing>(truncated_path_ring(base.ring, level));
      const VarId v = r->variable();
      const std::size_t k = base.ring->rank();
      auto encode_path = [path, base, v](const VElem& e) {
        std::vector<RingElem> coeffs(std::size_t(e.degree(v)) + 1, path->base->zero());
        for (unsigned d = 1; d < coeffs.size(); ++d) coeffs[d] = base.encode(e.coefficient(v, d));
        return path->reduce(coeffs);
      };
      auto decode_path = [path, base, v, k, r](const RingElem& a) {
        VElem out = r->base()->zero();
        for (std::size_t e = 1; e < std::size_t(2 * path->level); ++e) {
          std::vector<Coord> slice(a.coords.begin() + std::ptrdiff_t((e - 1) * k),
                                   a.coords.begin() + std::ptrdiff_t(e * k));
          RingElem c = path->base->reduce(slice);
          if (!path->base->is_zero(c)) out = out + IntPoly::term(1, Monomial::of(v, unsigned(e))) * base.decode(c);
        }
        return out;
      };
      if (!r->vanish1()) return FiniteModel{path->ring, encode_path, decode_path};
      auto loops = std::make_shared<Subring>(kernel(path->endpoint, "Omega" + std::to_string(level) + "(" +
                                                                        base.ring->label() + ")"));
      return FiniteModel{loops->ring,
                         [loops, encode_path](const VElem& e) {
                           auto at = loops->locate(encode_path(e));
                           if (!at) throw MembershipViolation("finite model: not a loop");
                           return *at;
                         },
                         [loops, decode_path](const RingElem& a) { return decode_path(loops->inclusion(a)); }};
    }
    case VirtualRing::Kind::Pullback: {
      FiniteModel a = finite_model(r->left(), level);
      FiniteModel b = finite_model(r->right(), level);
      FiniteModel c = finite_model(r->f().target(), level);
      RingHom fa = finite_hom(r->f(), a, c);
      RingHom gb = finite_hom(r->g(), b, c);
      auto pb = std::make_shared<Pullback>(pullback(fa, gb, "[" + r->label() + "]"));
      return FiniteModel{pb->ring,
                         [pb, a, b](const VElem& e) {
                           auto at = pb->locate(a.encode(e.first()), b.encode(e.second()));
                           if (!at) throw MembershipViolation("finite model: pair outside the fibre product");
                           return *at;
                         },
                         [pb, a, b](const RingElem& x) { return VElem::pair(a.decode(pb->rho(x)), b.decode(pb->sigma(x))); }};
    }
    case VirtualRing::Kind::Unital:
      throw InvalidInput("a unitalization has no finite model");
  }
  throw InvalidInput("unknown ring kind");
}

RingHom finite_hom(const VirtualHom& f, const FiniteModel& source, const FiniteModel& target) {
  std::vector<RingElem> images;
  for (std::size_t i = 0; i < source.ring->rank(); ++i)
    images.push_back(target.encode(f(source.decode(source.ring->generator(i)))));
  return RingHom(source.ring, target.ring, std::move(images));
}

}  // namespace hotring
