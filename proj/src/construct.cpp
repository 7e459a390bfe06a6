#include "hotring/construct.hpp"

namespace hotring {

namespace {

// Generators of {x in ambient : sum x_i images[i] = 0 in target}.
std::vector<RingElem> additive_kernel(const FiniteRing& ambient, const FiniteRing& target,
                                      const std::vector<RingElem>& images) {
  const std::size_t ka = ambient.rank(), kt = target.rank();
  IntMatrix a(kt, ka + kt);
  for (std::size_t j = 0; j < ka; ++j)
    for (std::size_t i = 0; i < kt; ++i) a(i, j) = images[j].coords[i];
  for (std::size_t i = 0; i < kt; ++i) a(i, ka + i) = target.order(i);
  std::vector<RingElem> gens;
  for (const IntVector& z : integer_kernel(a)) {
    std::vector<BigInt> head(z.begin(), z.begin() + std::ptrdiff_t(ka));
    RingElem e = ambient.reduce(head);
    if (!ambient.is_zero(e)) gens.push_back(std::move(e));
  }
  return gens;
}

}  // namespace

SubgroupPresentation::SubgroupPresentation(const FiniteRing& ambient, const std::vector<RingElem>& generators)
    : ambient_orders_(ambient.orders()), gen_count_(generators.size()) {
  const std::size_t k = ambient.rank(), m = generators.size();
  IntMatrix a(k, m + k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < k; ++i) a(i, j) = generators[j].coords[i];
  for (std::size_t i = 0; i < k; ++i) a(i, m + i) = ambient.order(i);
  system_ = smith_normal_form(a);
  if (m == 0) return;

  // Relations among the generators: projections of the kernel of [h | D].
  std::vector<IntVector> rels;
  for (std::size_t c = system_.rank; c < m + k; ++c) {
    IntVector row(m);
    for (std::size_t r = 0; r < m; ++r) row[r] = system_.right(r, c);
    rels.push_back(std::move(row));
  }
  IntMatrix rel(rels.size(), m);
  for (std::size_t r = 0; r < rels.size(); ++r)
    for (std::size_t c = 0; c < m; ++c) rel(r, c) = rels[r][c];
  SmithForm rs = smith_normal_form(rel);
  relation_right_ = rs.right;
  for (std::size_t j = 0; j < m; ++j) {
    BigInt s = j < rel.rows() ? rs.diag(j, j) : BigInt(0);
    if (s == 0) throw Error("subgroup of a finite group came out infinite (internal error)");
    if (s == 1) continue;
    kept_.push_back(j);
    orders_.push_back(static_cast<Coord>(s));
    std::vector<BigInt> v(k);
    for (std::size_t i = 0; i < m; ++i) {
      const BigInt& c = rs.right_inverse(j, i);
      if (c == 0) continue;
      for (std::size_t t = 0; t < k; ++t) v[t] += c * generators[i].coords[t];
    }
    basis_.push_back(ambient.reduce(v));
  }
}

std::optional<std::vector<Coord>> SubgroupPresentation::locate(const RingElem& v) const {
  const std::size_t m = gen_count_;
  if (m == 0) {
    for (Coord c : v.coords)
      if (c != 0) return std::nullopt;
    return std::vector<Coord>{};
  }
  IntVector rhs(v.coords.begin(), v.coords.end());
  auto z = solve_integer(system_, rhs);
  if (!z) return std::nullopt;
  std::vector<Coord> out;
  out.reserve(kept_.size());
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    const std::size_t j = kept_[t];
    BigInt y = 0;
    for (std::size_t i = 0; i < m; ++i) y += (*z)[i] * relation_right_(i, j);
    out.push_back(static_cast<Coord>(mod_floor(y, orders_[t])));
  }
  return out;
}

BigInt SubgroupPresentation::order() const {
  BigInt o = 1;
  for (Coord d : orders_) o *= d;
  return o;
}

std::optional<RingElem> Subring::locate(const RingElem& ambient) const {
  auto c = presentation->locate(ambient);
  if (!c) return std::nullopt;
  return RingElem{std::move(*c)};
}

Subring subring(const RingPtr& ambient, const std::vector<RingElem>& gens, std::string label) {
  auto pres = std::make_shared<SubgroupPresentation>(*ambient, gens);
  const auto& basis = pres->basis();
  RawRing raw;
  raw.label = std::move(label);
  raw.orders = pres->orders();
  const std::size_t k = basis.size();
  raw.mul.assign(k, std::vector<std::vector<Coord>>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto c = pres->locate(ambient->mul(basis[a], basis[b]));
      if (!c) throw InvalidInput("subring generators of " + ambient->label() + " are not closed under products");
      raw.mul[a][b] = std::move(*c);
    }
  if (ambient->unit())
    if (auto u = pres->locate(*ambient->unit())) raw.unit = std::move(*u);
  RingPtr ring = validate_ring(raw);
  RingHom inclusion(ring, ambient, basis);
  return Subring{ring, std::move(inclusion), std::move(pres)};
}

Subring canonicalize(const RingPtr& r) {
  std::vector<RingElem> gens;
  for (std::size_t i = 0; i < r->rank(); ++i) gens.push_back(r->generator(i));
  return subring(r, gens, r->label());
}

RingPtr zero_ring() {
  static const RingPtr zero = validate_ring(RawRing{"0", {}, {}, std::vector<Coord>{}});
  return zero;
}

RingElem Product::pair(const RingElem& a, const RingElem& b) const {
  RingElem e;
  e.coords = a.coords;
  e.coords.insert(e.coords.end(), b.coords.begin(), b.coords.end());
  return e;
}

Product direct_product(const RingPtr& a, const RingPtr& b, std::string label) {
  const std::size_t ka = a->rank(), kb = b->rank(), k = ka + kb;
  RawRing raw;
  raw.label = label.empty() ? a->label() + "x" + b->label() : std::move(label);
  raw.orders = a->orders();
  raw.orders.insert(raw.orders.end(), b->orders().begin(), b->orders().end());
  raw.mul.assign(k, std::vector<std::vector<Coord>>(k, std::vector<Coord>(k, 0)));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j)
      for (std::size_t l = 0; l < ka; ++l) raw.mul[i][j][l] = a->generator_product(i, j).coords[l];
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j)
      for (std::size_t l = 0; l < kb; ++l) raw.mul[ka + i][ka + j][ka + l] = b->generator_product(i, j).coords[l];
  if (a->unit() && b->unit()) {
    std::vector<Coord> u = a->unit()->coords;
    u.insert(u.end(), b->unit()->coords.begin(), b->unit()->coords.end());
    raw.unit = u;
  }
  RingPtr ring = validate_ring(raw);
  std::vector<RingElem> p1, p2, i1, i2;
  for (std::size_t i = 0; i < k; ++i) {
    p1.push_back(i < ka ? a->generator(i) : a->zero());
    p2.push_back(i < ka ? b->zero() : b->generator(i - ka));
  }
  auto pair = [&](const RingElem& x, const RingElem& y) {
    RingElem e{x.coords};
    e.coords.insert(e.coords.end(), y.coords.begin(), y.coords.end());
    return e;
  };
  for (std::size_t i = 0; i < ka; ++i) i1.push_back(pair(a->generator(i), b->zero()));
  for (std::size_t i = 0; i < kb; ++i) i2.push_back(pair(a->zero(), b->generator(i)));
  return Product{ring, RingHom(ring, a, p1), RingHom(ring, b, p2), RingHom(a, ring, i1), RingHom(b, ring, i2)};
}

std::optional<RingElem> Pullback::locate(const RingElem& a, const RingElem& b) const {
  return embedding.locate(product.pair(a, b));
}

Pullback pullback(const RingHom& f, const RingHom& g, std::string label) {
  if (!same_ring(*f.target(), *g.target())) throw InvalidInput("pullback: f and g must share their target");
  Product prod = direct_product(f.source(), g.source());
  const FiniteRing& p = *prod.ring;
  std::vector<RingElem> diff;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    RingElem gi = p.generator(i);
    diff.push_back(f.target()->sub(f(prod.first(gi)), g(prod.second(gi))));
  }
  std::vector<RingElem> gens = additive_kernel(p, *f.target(), diff);
  if (label.empty()) label = f.source()->label() + "x_" + f.target()->label() + g.source()->label();
  Subring emb = subring(prod.ring, gens, std::move(label));
  RingHom rho = compose(prod.first, emb.inclusion);
  RingHom sigma = compose(prod.second, emb.inclusion);
  return Pullback{emb.ring, std::move(rho), std::move(sigma), std::move(prod), std::move(emb)};
}

Subring kernel(const RingHom& f, std::string label) {
  std::vector<RingElem> gens = additive_kernel(*f.source(), *f.target(), f.images());
  if (label.empty()) label = "ker(" + f.source()->label() + "->" + f.target()->label() + ")";
  return subring(f.source(), gens, std::move(label));
}

Subring image(const RingHom& f, std::string label) {
  if (label.empty()) label = "im(" + f.source()->label() + "->" + f.target()->label() + ")";
  return subring(f.target(), f.images(), std::move(label));
}

Subring ideal_closure(const RingPtr& r, const std::vector<RingElem>& gens, std::string label) {
  std::vector<RingElem> current = gens;
  SubgroupPresentation pres(*r, current);
  for (;;) {
    std::vector<RingElem> grown = pres.basis();
    for (const RingElem& b : pres.basis())
      for (std::size_t i = 0; i < r->rank(); ++i) {
        grown.push_back(r->mul(r->generator(i), b));
        grown.push_back(r->mul(b, r->generator(i)));
      }
    SubgroupPresentation next(*r, grown);
    if (next.order() == pres.order()) break;
    pres = std::move(next);
  }
  if (label.empty()) label = "I(" + r->label() + ")";
  return subring(r, pres.basis(), std::move(label));
}

Quotient quotient(const RingPtr& r, const std::vector<RingElem>& ideal_gens, std::string label) {
  Subring ideal = ideal_closure(r, ideal_gens);
  const std::size_t k = r->rank();
  const auto& basis = ideal.presentation->basis();
  IntMatrix rel(k + basis.size(), k);
  for (std::size_t i = 0; i < k; ++i) rel(i, i) = r->order(i);
  for (std::size_t t = 0; t < basis.size(); ++t)
    for (std::size_t i = 0; i < k; ++i) rel(k + t, i) = basis[t].coords[i];
  SmithForm s = smith_normal_form(rel);

  std::vector<std::size_t> kept;
  std::vector<Coord> orders;
  for (std::size_t j = 0; j < k; ++j) {
    const BigInt& d = s.diag(j, j);
    if (d == 0) throw Error("quotient of a finite ring came out infinite (internal error)");
    if (d != 1) {
      kept.push_back(j);
      orders.push_back(static_cast<Coord>(d));
    }
  }
  auto project = [&](const RingElem& v) {
    std::vector<Coord> y;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      BigInt acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += BigInt(v.coords[i]) * s.right(i, kept[t]);
      y.push_back(static_cast<Coord>(mod_floor(acc, orders[t])));
    }
    return y;
  };
  std::vector<RingElem> lifts;
  for (std::size_t j : kept) {
    std::vector<BigInt> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = s.right_inverse(j, i);
    lifts.push_back(r->reduce(v));
  }
  RawRing raw;
  raw.label = label.empty() ? r->label() + "/I" : std::move(label);
  raw.orders = orders;
  raw.mul.assign(kept.size(), std::vector<std::vector<Coord>>(kept.size()));
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = 0; b < kept.size(); ++b) raw.mul[a][b] = project(r->mul(lifts[a], lifts[b]));
  if (r->unit()) raw.unit = project(*r->unit());
  RingPtr q = validate_ring(raw);
  std::vector<RingElem> images;
  for (std::size_t i = 0; i < k; ++i) images.push_back(RingElem{project(r->generator(i))});
  RingHom proj(r, q, std::move(images));
  return Quotient{q, std::move(proj), std::move(ideal)};
}

std::vector<std::int64_t> reduce_power_mod_loop(int n, int level) {
  // Long division of x^n by the monic (x^2 - x)^level, over Z.
  const int deg = 2 * level;
  std::vector<BigInt> divisor{1};  // ascending coefficients
  for (int t = 0; t < level; ++t) {
    std::vector<BigInt> next(divisor.size() + 2);
    for (std::size_t i = 0; i < divisor.size(); ++i) {
      next[i + 2] += divisor[i];
      next[i + 1] -= divisor[i];
    }
    divisor = std::move(next);
  }
  std::vector<BigInt> p(std::size_t(std::max(n, deg)) + 1);
  p[std::size_t(n)] = 1;
  for (int top = int(p.size()) - 1; top >= deg; --top) {
    BigInt c = p[std::size_t(top)];
    if (c == 0) continue;
    for (int i = 0; i <= deg; ++i) p[std::size_t(top - deg + i)] -= c * divisor[std::size_t(i)];
  }
  std::vector<std::int64_t> out(std::size_t(deg - 1), 0);
  for (int e = 1; e < deg; ++e) out[std::size_t(e - 1)] = static_cast<std::int64_t>(p[std::size_t(e)]);
  return out;
}

RingElem TruncatedPathRing::reduce(const std::vector<RingElem>& coefficients) const {
  const std::size_t k = base->rank();
  if (!coefficients.empty() && !base->is_zero(coefficients[0]))
    throw MembershipViolation("truncated path ring element must have zero constant term");
  std::vector<Coord> out(ring->rank(), 0);
  for (std::size_t e = 1; e < coefficients.size(); ++e) {
    if (base->is_zero(coefficients[e])) continue;
    std::vector<std::int64_t> r = reduce_power_mod_loop(int(e), level);
    for (std::size_t t = 0; t < r.size(); ++t) {
      if (r[t] == 0) continue;
      RingElem c = base->scale(coefficients[e], r[t]);
      for (std::size_t i = 0; i < k; ++i) out[t * k + i] += c.coords[i];
    }
  }
  return ring->reduce(out);
}

RingElem TruncatedPathRing::lift(const RingElem& b) const {
  std::vector<Coord> out(ring->rank(), 0);
  for (std::size_t i = 0; i < base->rank(); ++i) out[i] = b.coords[i];
  return ring->reduce(out);
}

TruncatedPathRing truncated_path_ring(const RingPtr& r, int level) {
  if (level < 1) throw InvalidInput("truncation level must be >= 1");
  const std::size_t k = r->rank();
  const std::size_t exps = std::size_t(2 * level - 1);
  RawRing raw;
  raw.label = "E" + std::to_string(level) + "(" + r->label() + ")";
  for (std::size_t e = 0; e < exps; ++e) raw.orders.insert(raw.orders.end(), r->orders().begin(), r->orders().end());
  const std::size_t n = exps * k;
  raw.mul.assign(n, std::vector<std::vector<Coord>>(n, std::vector<Coord>(n, 0)));
  for (std::size_t ea = 0; ea < exps; ++ea)
    for (std::size_t eb = 0; eb < exps; ++eb) {
      std::vector<std::int64_t> red = reduce_power_mod_loop(int(ea + eb + 2), level);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          const RingElem& c = r->generator_product(i, j);
          auto& slot = raw.mul[ea * k + i][eb * k + j];
          for (std::size_t t = 0; t < red.size(); ++t)
            for (std::size_t l = 0; l < k; ++l) slot[t * k + l] += red[t] * c.coords[l];
        }
    }
  RingPtr ring = validate_ring(raw);
  std::vector<RingElem> images;
  for (std::size_t e = 0; e < exps; ++e)
    for (std::size_t i = 0; i < k; ++i) images.push_back(r->generator(i));
  RingHom endpoint(ring, r, std::move(images));
  return TruncatedPathRing{ring, r, level, std::move(endpoint)};
}

}  // namespace hotring
