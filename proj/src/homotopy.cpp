#include "hotring/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace hotring {

Poly HomotopyCertificate::apply(const RingElem& s) const {
  Poly out(f0.target());
  for (std::size_t i = 0; i < images.size(); ++i)
    if (s.coords[i] != 0) out += images[i].scale(s.coords[i]);
  return out;
}

namespace {

CertificateCheck fail(std::string why) { return CertificateCheck{false, std::move(why)}; }

std::string gen_name(std::size_t i) { return "g" + std::to_string(i + 1); }

}  // namespace

CertificateCheck verify_certificate(const HomotopyCertificate& c) {
  const RingPtr& s = c.f0.source();
  const RingPtr& r = c.f0.target();
  if (!same_ring(*s, *c.f1.source()) || !same_ring(*r, *c.f1.target())) return fail("endpoints have different types");
  if (c.images.size() != s->rank()) return fail("expected one image per generator of " + s->label());
  for (std::size_t i = 0; i < c.images.size(); ++i) {
    const Poly& p = c.images[i];
    if (!same_ring(*p.ring(), *r)) return fail("h(" + gen_name(i) + ") has coefficients outside " + r->label());
    for (VarId v : p.vars())
      if (v != c.var) return fail("h(" + gen_name(i) + ") mentions " + var_name(v));
    if (!p.scale(s->order(i)).is_zero()) return fail("order of " + gen_name(i) + " does not kill h(" + gen_name(i) + ")");
  }
  for (std::size_t i = 0; i < s->rank(); ++i)
    for (std::size_t j = 0; j < s->rank(); ++j)
      if (!(c.apply(s->generator_product(i, j)) == c.images[i] * c.images[j]))
        return fail("h(" + gen_name(i) + gen_name(j) + ") != h(" + gen_name(i) + ")h(" + gen_name(j) + ")");
  for (std::size_t i = 0; i < s->rank(); ++i) {
    if (!(c.images[i].eval(c.var, 0) == Poly::constant(r, c.f0(s->generator(i)))))
      return fail("endpoint " + var_name(c.var) + "=0 differs from f0 at " + gen_name(i));
    if (!(c.images[i].eval(c.var, 1) == Poly::constant(r, c.f1(s->generator(i)))))
      return fail("endpoint " + var_name(c.var) + "=1 differs from f1 at " + gen_name(i));
  }
  return {};
}

HomotopyCertificate constant_certificate(const RingHom& f, VarId v) {
  std::vector<Poly> images;
  for (const RingElem& a : f.images()) images.push_back(Poly::constant(f.target(), a));
  return HomotopyCertificate{f, f, v, std::move(images)};
}

HomotopyCertificate reverse(const HomotopyCertificate& c) {
  std::vector<Poly> images;
  const IntPoly flip = IntPoly(1) - IntPoly::variable(c.var);
  for (const Poly& p : c.images) images.push_back(p.substitute({{c.var, flip}}));
  return HomotopyCertificate{c.f1, c.f0, c.var, std::move(images)};
}

HomotopyCertificate precompose(const HomotopyCertificate& c, const RingHom& f) {
  std::vector<Poly> images;
  for (const RingElem& a : f.images()) images.push_back(c.apply(a));
  return HomotopyCertificate{compose(c.f0, f), compose(c.f1, f), c.var, std::move(images)};
}

HomotopyCertificate postcompose(const RingHom& k, const HomotopyCertificate& c) {
  std::vector<Poly> images;
  for (const Poly& p : c.images) images.push_back(p.map_coefficients(k));
  return HomotopyCertificate{compose(k, c.f0), compose(k, c.f1), c.var, std::move(images)};
}

CertificateCheck verify_certificate(const VirtualCertificate& c, const std::vector<VElem>& probe_set) {
  HomCheck hom = check_hom(c.h, probe_set);
  if (!hom.ok) return fail("h: " + hom.failure);
  for (const VElem& a : probe_set) {
    VElem image = c.h(a);
    if (!(image.eval(c.var, 0) == c.f0(a))) return fail("endpoint 0 differs from " + c.f0.name() + " at " + a.format());
    if (!(image.eval(c.var, 1) == c.f1(a))) return fail("endpoint 1 differs from " + c.f1.name() + " at " + a.format());
  }
  return {};
}

// ---------------------------------------------------------------- search

SearchResult search_elementary(const RingHom& f0, const RingHom& f1, unsigned d, std::uint64_t cap, VarId v) {
  if (!same_ring(*f0.source(), *f1.source()) || !same_ring(*f0.target(), *f1.target()))
    throw InvalidInput("search_elementary: endpoints have different types");
  const FiniteRing& s = *f0.source();
  const RingPtr& rp = f0.target();
  const FiniteRing& r = *rp;
  const std::size_t k = s.rank();
  SearchResult out;
  out.degree_bound = d;

  if (f0.images() == f1.images()) {
    out.searched = 1;
    out.certificate = constant_certificate(f0, v);
    return out;
  }
  if (d == 0) {
    out.searched = 1;
    return out;
  }

  std::vector<RingElem> all = r.elements();
  std::vector<std::vector<RingElem>> killed(k);
  for (std::size_t i = 0; i < k; ++i)
    for (const RingElem& x : all)
      if (r.is_zero(r.scale(x, s.order(i)))) killed[i].push_back(x);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ready(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t last = std::max(i, j);
      const RingElem& p = s.generator_product(i, j);
      for (std::size_t l = 0; l < k; ++l)
        if (p.coords[l] != 0) last = std::max(last, l);
      ready[last].emplace_back(i, j);
    }

  for (unsigned deg = 1; deg <= d; ++deg) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
      total = std::min<std::uint64_t>(UINT64_MAX / 2, total * saturating_pow(killed[i].size(), deg - 1));
    if (total > cap) throw BudgetExceeded("homotopy search at degree " + std::to_string(deg), total, cap);

    // Candidate images per generator: f0 + sum_{e<deg} r_e x^e + (f1 - f0 - sum r_e) x^deg.
    std::vector<std::vector<Poly>> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
      const RingElem a0 = f0.images()[i], a1 = f1.images()[i];
      const std::size_t m = killed[i].size();
      const std::uint64_t count = saturating_pow(m, deg - 1);
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly p = Poly::constant(rp, a0);
        RingElem top = r.sub(a1, a0);
        std::uint64_t rest = idx;
        for (unsigned e = 1; e < deg; ++e) {
          const RingElem& c = killed[i][rest % m];
          rest /= m;
          p += Poly::term(rp, c, Monomial::of(v, e));
          top = r.sub(top, c);
        }
        p += Poly::term(rp, top, Monomial::of(v, deg));
        candidates[i].push_back(std::move(p));
      }
    }

    std::vector<Poly> images(k, Poly(rp));
    auto apply = [&](const RingElem& a) {
      Poly out_p(rp);
      for (std::size_t l = 0; l < k; ++l)
        if (a.coords[l] != 0) out_p += images[l].scale(a.coords[l]);
      return out_p;
    };
    bool found = false;
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
      if (depth == k) {
        found = true;
        return;
      }
      for (const Poly& p : candidates[depth]) {
        ++out.searched;
        images[depth] = p;
        bool ok = true;
        for (auto [i, j] : ready[depth])
          if (!(apply(s.generator_product(i, j)) == images[i] * images[j])) {
            ok = false;
            break;
          }
        if (ok) self(self, depth + 1);
        if (found) return;
      }
    };
    recurse(recurse, 0);
    if (found) {
      out.certificate = HomotopyCertificate{f0, f1, v, images};
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- classes

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t UnionFind::find(std::size_t i) {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  return true;
}

std::vector<std::size_t> UnionFind::labels() {
  std::vector<std::size_t> out(parent_.size());
  std::map<std::size_t, std::size_t> seen;
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    auto [it, inserted] = seen.emplace(find(i), seen.size());
    out[i] = it->second;
  }
  return out;
}

CertificateCheck verify_chain(const HomotopyChain& chain, const RingHom& from, const RingHom& to) {
  if (chain.empty()) return from.images() == to.images() ? CertificateCheck{} : fail("empty chain between distinct maps");
  if (chain.front().f0.images() != from.images()) return fail("chain does not start at the source map");
  if (chain.back().f1.images() != to.images()) return fail("chain does not end at the target map");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (auto c = verify_certificate(chain[i]); !c.ok) return fail("link " + std::to_string(i) + ": " + c.failure);
    if (i + 1 < chain.size() && chain[i].f1.images() != chain[i + 1].f0.images())
      return fail("links " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not meet");
  }
  return {};
}

std::optional<HomotopyChain> HomotopyClasses::chain(std::size_t i, std::size_t j) const {
  if (label.at(i) != label.at(j)) return std::nullopt;
  if (i == j) return HomotopyChain{};
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(homs.size());  // (neighbour, merge index)
  for (std::size_t m = 0; m < merges.size(); ++m) {
    adj[merges[m].from].emplace_back(merges[m].to, m);
    adj[merges[m].to].emplace_back(merges[m].from, m);
  }
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> prev(homs.size());
  std::vector<bool> seen(homs.size(), false);
  std::deque<std::size_t> queue{i};
  seen[i] = true;
  while (!queue.empty() && !seen[j]) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (auto [w, m] : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        prev[w] = std::make_pair(u, m);
        queue.push_back(w);
      }
  }
  if (!seen[j]) return std::nullopt;
  HomotopyChain out;
  for (std::size_t w = j; w != i; w = prev[w]->first) {
    const Merge& m = merges[prev[w]->second];
    out.push_back(m.to == w ? m.certificate : reverse(m.certificate));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

HomotopyClasses homotopy_classes(const RingPtr& r, const RingPtr& s, unsigned d, std::uint64_t hom_cap,
                                 std::uint64_t search_cap, std::size_t pair_limit) {
  HomotopyClasses out;
  out.degree_bound = d;
  out.homs = enumerate_homs(r, s, hom_cap);
  std::sort(out.homs.begin(), out.homs.end());
  const std::size_t n = out.homs.size();
  UnionFind uf(n);
  out.all_pairs = n <= pair_limit;
  auto attempt = [&](std::size_t i, std::size_t j) {
    SearchResult res = search_elementary(out.homs[i], out.homs[j], d, search_cap);
    out.searched += res.searched;
    if (!res.certificate) return;
    uf.unite(i, j);
    out.merges.push_back(Merge{i, j, std::move(*res.certificate)});
  };
  if (out.all_pairs) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (uf.find(i) != uf.find(j)) attempt(i, j);
  } else {
    std::vector<std::size_t> roots;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t root : roots)
        if (uf.find(root) == root && uf.find(j) != root) attempt(root, j);
      if (uf.find(j) == j) roots.push_back(j);
    }
  }
  out.label = uf.labels();
  out.class_count = n == 0 ? 0 : *std::max_element(out.label.begin(), out.label.end()) + 1;
  return out;
}

namespace {

std::optional<std::size_t> index_of(const std::vector<RingHom>& sorted, const RingHom& f) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
  if (it == sorted.end() || it->images() != f.images()) return std::nullopt;
  return std::size_t(it - sorted.begin());
}

}  // namespace

EquivalenceResult search_homotopy_equivalence(const RingHom& f, unsigned d, std::size_t chain_cap) {
  const RingPtr& r = f.source();
  const RingPtr& s = f.target();
  EquivalenceResult out;
  HomotopyClasses on_s = homotopy_classes(s, s, d);
  HomotopyClasses on_r = homotopy_classes(r, r, d);
  const auto id_s = index_of(on_s.homs, RingHom::identity(s));
  const auto id_r = index_of(on_r.homs, RingHom::identity(r));
  std::vector<RingHom> candidates = enumerate_homs(s, r);
  std::sort(candidates.begin(), candidates.end());
  // Prefer a strict inverse when one exists.
  std::stable_partition(candidates.begin(), candidates.end(), [&](const RingHom& g) {
    return compose(f, g).images() == RingHom::identity(s).images() &&
           compose(g, f).images() == RingHom::identity(r).images();
  });
  for (const RingHom& g : candidates) {
    ++out.candidates;
    auto fg = index_of(on_s.homs, compose(f, g));
    auto gf = index_of(on_r.homs, compose(g, f));
    if (!fg || !gf || !id_s || !id_r) continue;
    auto c1 = on_s.chain(*fg, *id_s);
    auto c2 = on_r.chain(*gf, *id_r);
    if (!c1 || !c2 || c1->size() > chain_cap || c2->size() > chain_cap) continue;
    out.inverse = g;
    out.fg_to_id = std::move(*c1);
    out.gf_to_id = std::move(*c2);
    return out;
  }
  return out;
}

}  // namespace hotring
