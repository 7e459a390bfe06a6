#include "hotring/glk.hpp"

#include "hotring/homotopy.hpp"
#include "hotring/homs.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hotring {

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(RingPtr ring, std::size_t n) : ring_(std::move(ring)), n_(n), entries_(n * n, Poly(ring_)) {}

Matrix Matrix::from_elements(const RingPtr& ring, std::size_t n, const std::vector<RingElem>& entries) {
  if (entries.size() != n * n) throw InvalidInput("matrix needs n^2 entries");
  Matrix m(ring, n);
  for (std::size_t i = 0; i < n * n; ++i) m.entries_[i] = Poly::constant(ring, entries[i]);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool Matrix::is_constant() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.vars().empty(); });
}

std::vector<RingElem> Matrix::constants() const {
  std::vector<RingElem> out;
  for (const Poly& p : entries_) {
    if (!p.vars().empty()) throw InvalidInput("matrix has polynomial entries");
    out.push_back(p.constant_term());
  }
  return out;
}

namespace {

void require_same(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw InvalidInput("matrix sizes differ");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix out = a;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a) {
  Matrix out = a;
  for (Poly& p : out.entries_) p = -p;
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  const std::size_t n = a.n_;
  Matrix out(a.ring_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

Matrix Matrix::eval(VarId v, int value) const {
  Matrix out = *this;
  for (Poly& p : out.entries_) p = p.eval(v, value);
  return out;
}

Matrix Matrix::stabilize() const {
  Matrix out(ring_, n_ + 1);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

std::string Matrix::format() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).format();
    }
  }
  return out + "]";
}

Matrix circle(const Matrix& a, const Matrix& b) { return a + b + a * b; }

bool witness_holds(const QiMatrix& q) { return circle(q.m, q.witness).is_zero() && circle(q.witness, q.m).is_zero(); }

// ---------------------------------------------------------------- quasi-inverses

namespace {

struct RingTraits {
  std::optional<int> nil_class;
  bool commutative = false;
  bool unital = false;
};

RingTraits traits_of(const FiniteRing& r) {
  return RingTraits{nilpotency_class(r), is_commutative(r), r.unit().has_value()};
}

Matrix unit_matrix(const RingPtr& r, std::size_t n) {
  Matrix out(r, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Poly::constant(r, *r->unit());
  return out;
}

Matrix minor(const Matrix& m, std::size_t row, std::size_t col) {
  const std::size_t n = m.size();
  Matrix out(m.ring(), n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

bool is_nilpotent_elem(const FiniteRing& r, const RingElem& a) {
  RingElem p = a;
  std::set<RingElem> seen;
  while (!r.is_zero(p)) {
    if (!seen.insert(p).second) return false;
    p = r.mul(p, a);
  }
  return true;
}

// Inverse of a polynomial over a commutative unital ring, if it is a unit.
std::optional<Poly> invert_poly(const Poly& u) {
  const RingPtr& r = u.ring();
  auto c_inv = inverse(*r, u.constant_term());
  if (!c_inv) return std::nullopt;
  for (const auto& [m, c] : u.terms())
    if (!m.is_one() && !is_nilpotent_elem(*r, c)) return std::nullopt;
  const Poly cinv = Poly::constant(r, *c_inv);
  const Poly one = Poly::constant(r, *r->unit());
  const Poly w = -(cinv * (u - Poly::constant(r, u.constant_term())));
  // (1 - w')^-1 with w' nilpotent: 1 + w + w^2 + ...
  Poly sum = one, power = one;
  for (int k = 0; k < 4096; ++k) {
    power = power * w;
    if (power.is_zero()) return sum * cinv;
    sum += power;
  }
  return std::nullopt;
}

QiResult with_witness(Matrix m, Matrix n, std::vector<std::string> trace) {
  QiResult out;
  out.trace = std::move(trace);
  if (witness_holds(QiMatrix{m, n})) {
    out.status = QiResult::Status::Found;
    out.witness = std::move(n);
  } else {
    out.trace.push_back("candidate witness failed verification");
  }
  return out;
}

std::vector<Coord> flatten(const Matrix& m) {
  std::vector<Coord> out;
  for (const RingElem& e : m.constants()) out.insert(out.end(), e.coords.begin(), e.coords.end());
  return out;
}

QiResult quasi_inverse_with(const Matrix& m, const RingTraits& t, const QiOptions& options) {
  const RingPtr& r = m.ring();
  const std::size_t n = m.size();
  std::vector<std::string> trace;
  if (m.is_zero()) {
    trace.push_back("zero");
    return with_witness(m, m, trace);
  }
  if (t.nil_class) {
    trace.push_back("nilpotent series");
    Matrix neg = -m, power = neg, sum(r, n);
    for (int i = 1; i < std::max(*t.nil_class, 1) + 1 && !power.is_zero(); ++i) {
      sum = sum + power;
      power = power * neg;
    }
    return with_witness(m, sum, trace);
  }
  if (t.unital && t.commutative) {
    trace.push_back("classical inverse");
    Matrix im = unit_matrix(r, n) + m;
    Poly det = determinant(im);
    std::optional<Poly> det_inv = invert_poly(det);
    if (!det_inv) {
      QiResult out;
      out.status = QiResult::Status::NotQuasiInvertible;
      out.trace = trace;
      out.trace.push_back("determinant is not a unit");
      return out;
    }
    Matrix inv(r, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Poly cof = n == 1 ? Poly::constant(r, *r->unit()) : determinant(minor(im, j, i));
        if ((i + j) % 2) cof = -cof;
        inv(i, j) = cof * *det_inv;
      }
    return with_witness(m, inv - unit_matrix(r, n), trace);
  }
  if (m.is_constant()) {
    trace.push_back("circle powers");
    std::set<std::vector<Coord>> seen;
    Matrix prev(r, n), power = m;
    for (std::uint64_t k = 0; k < options.enumeration_cap; ++k) {
      if (power.is_zero()) return with_witness(m, prev, trace);
      if (!seen.insert(flatten(power)).second) {
        QiResult out;
        out.status = QiResult::Status::NotQuasiInvertible;
        out.trace = trace;
        out.trace.push_back("circle powers cycle without reaching 0");
        return out;
      }
      prev = power;
      power = circle(power, m);
    }
    trace.push_back("circle power cap reached");
  } else {
    trace.push_back("bounded witness enumeration");
    std::set<VarId> vars;
    for (const Poly& p : m.entries()) {
      auto v = p.vars();
      vars.insert(v.begin(), v.end());
    }
    const std::uint64_t per_entry = saturating_pow(r->size(), std::uint64_t(options.witness_degree) + 1);
    const std::uint64_t total = vars.size() == 1 ? saturating_pow(per_entry, n * n) : UINT64_MAX;
    if (total <= options.enumeration_cap) {
      const VarId v = *vars.begin();
      std::vector<RingElem> elems = r->elements();
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        Matrix cand(r, n);
        std::uint64_t rest = idx;
        for (std::size_t e = 0; e < n * n; ++e)
          for (unsigned d = 0; d <= options.witness_degree; ++d) {
            const RingElem& c = elems[rest % elems.size()];
            rest /= elems.size();
            cand(e / n, e % n) += Poly::term(r, c, Monomial::of(v, d));
          }
        if (witness_holds(QiMatrix{m, cand})) return with_witness(m, cand, trace);
      }
      trace.push_back("no witness of degree <= " + std::to_string(options.witness_degree));
    } else {
      trace.push_back("enumeration over budget");
    }
  }
  QiResult out;
  out.status = QiResult::Status::Unknown;
  out.trace = trace;
  return out;
}

}  // namespace

QiResult quasi_inverse(const Matrix& m, const QiOptions& options) {
  return quasi_inverse_with(m, traits_of(*m.ring()), options);
}

Poly determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw InvalidInput("determinant of an empty matrix");
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Poly out(m.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Poly term = m(0, j) * determinant(minor(m, 0, j));
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

// ---------------------------------------------------------------- GL_n

std::uint64_t GlGroup::matrix_index(const Matrix& m) const {
  std::uint64_t idx = 0, radix = 1;
  for (const RingElem& e : m.constants()) {
    idx += radix * ring->index_of(e);
    radix *= ring->size();
  }
  return idx;
}

std::size_t GlGroup::id_of(const Matrix& m) const {
  std::int64_t s = slot.at(matrix_index(m));
  if (s < 0) throw InvalidInput("matrix is not quasi-invertible: " + m.format());
  return std::size_t(s);
}

std::size_t GlGroup::mul(std::size_t a, std::size_t b) const { return id_of(circle(elements[a], elements[b])); }

namespace {

Matrix matrix_at(const RingPtr& r, std::size_t n, std::uint64_t idx) {
  std::vector<RingElem> entries;
  for (std::size_t e = 0; e < n * n; ++e) {
    entries.push_back(r->element_at(idx % r->size()));
    idx /= r->size();
  }
  return Matrix::from_elements(r, n, entries);
}

}  // namespace

GlGroup gl_group(const RingPtr& a, std::size_t n, std::uint64_t cap) {
  if (n == 0) throw InvalidInput("GL_0 is not defined here");
  const std::uint64_t total = saturating_pow(a->size(), n * n);
  if (total > cap) throw BudgetExceeded("GL_" + std::to_string(n) + "(" + a->label() + ")", total, cap);
  const RingTraits t = traits_of(*a);
  GlGroup g;
  g.ring = a;
  g.n = n;
  g.slot.assign(total, -1);
  std::vector<Matrix> witnesses;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Matrix m = matrix_at(a, n, idx);
    QiResult q = quasi_inverse_with(m, t, QiOptions{});
    if (q.status == QiResult::Status::Unknown)
      throw VerificationFailure("quasi-invertibility undecided for " + m.format());
    if (q.status != QiResult::Status::Found) continue;
    g.slot[idx] = std::int64_t(g.elements.size());
    g.elements.push_back(std::move(m));
    witnesses.push_back(std::move(*q.witness));
  }
  for (const Matrix& w : witnesses) g.inverse.push_back(g.id_of(w));
  return g;
}

GroupAxioms check_group_axioms(const GlGroup& g, std::uint64_t exhaustive_cap, Rng* rng) {
  GroupAxioms out;
  const std::size_t n = g.order();
  out.identity = n > 0 && g.elements[0].is_zero();
  for (std::size_t a = 0; a < n; ++a) {
    if (!witness_holds(QiMatrix{g.elements[a], g.elements[g.inverse[a]]})) out.inverses = false;
    if (!(circle(g.elements[a], g.elements[0]) == g.elements[a])) out.identity = false;
  }
  auto closed = [&](std::size_t a, std::size_t b) {
    return g.slot.at(g.matrix_index(circle(g.elements[a], g.elements[b]))) >= 0;
  };
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return circle(circle(g.elements[a], g.elements[b]), g.elements[c]) ==
           circle(g.elements[a], circle(g.elements[b], g.elements[c]));
  };
  if (std::uint64_t(n) * n <= exhaustive_cap) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!closed(a, b)) out.closure = false;
  } else {
    out.exhaustive = false;
  }
  if (std::uint64_t(n) * n * n <= exhaustive_cap) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) out.associativity = false;
  } else {
    out.exhaustive = false;
    Rng fallback(0);
    Rng& gen = rng ? *rng : fallback;
    for (int s = 0; s < 1000; ++s) {
      std::size_t a = gen() % n, b = gen() % n, c = gen() % n;
      if (!closed(a, b)) out.closure = false;
      if (!assoc(a, b, c)) out.associativity = false;
    }
  }
  return out;
}

// ---------------------------------------------------------------- pi_0

std::vector<std::size_t> strict_pi0(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  UnionFind uf(count);
  for (auto [a, b] : edges) {
    if (a >= count || b >= count) throw IndexOutOfRange("edge endpoint out of range");
    uf.unite(a, b);
  }
  return uf.labels();
}

namespace {

// Subgroup generated by the current members plus gen, by closure under products.
void close_subgroup(const GlGroup& g, std::vector<bool>& in_h, std::vector<std::size_t>& members,
                    const std::vector<std::size_t>& gens) {
  std::deque<std::size_t> queue(members.begin(), members.end());
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t s : gens) {
      std::size_t y = g.mul(x, s);
      if (!in_h[y]) {
        in_h[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
}

struct Kv1Core {
  std::vector<bool> in_h;
  std::vector<std::size_t> members, gens;
  std::uint64_t candidates = 0, skipped_known = 0, skipped_unknown = 0, rejected = 0;
};

Kv1Core identify(const GlGroup& g, unsigned d, const Kv1Options& options) {
  const RingPtr& a = g.ring;
  const std::size_t n = g.n;
  const std::uint64_t per = saturating_pow(a->size(), n * n);
  const std::uint64_t total = saturating_pow(per, d);
  if (total > options.candidate_cap)
    throw BudgetExceeded("kv1 candidates at degree " + std::to_string(d), total, options.candidate_cap);
  const RingTraits t = traits_of(*a);
  const VarId tv = var("t");
  Kv1Core core;
  core.in_h.assign(g.order(), false);
  core.in_h[0] = true;
  core.members.push_back(0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ++core.candidates;
    Matrix p(a, n), endpoint(a, n);
    std::uint64_t rest = idx;
    for (unsigned e = 1; e <= d; ++e) {
      Matrix coeff = matrix_at(a, n, rest % per);
      rest /= per;
      endpoint = endpoint + coeff;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) += coeff(i, j).times_monomial(Monomial::of(tv, e));
    }
    std::int64_t at = g.slot[g.matrix_index(endpoint)];
    if (at >= 0 && core.in_h[std::size_t(at)]) {
      ++core.skipped_known;
      continue;
    }
    QiResult q = quasi_inverse_with(p, t, options.qi);
    if (q.status == QiResult::Status::Unknown) {
      ++core.skipped_unknown;
      continue;
    }
    if (q.status == QiResult::Status::NotQuasiInvertible) {
      ++core.rejected;
      continue;
    }
    if (at < 0) throw VerificationFailure("endpoint of an invertible path is not invertible: " + endpoint.format());
    core.gens.push_back(std::size_t(at));
    core.in_h[std::size_t(at)] = true;
    core.members.push_back(std::size_t(at));
    close_subgroup(g, core.in_h, core.members, core.gens);
  }
  return core;
}

}  // namespace

Pi0Presentation kv1_approx(const RingPtr& a, std::size_t n, unsigned d, const Kv1Options& options) {
  if (d == 0) throw InvalidInput("degree bound must be >= 1");
  GlGroup g = gl_group(a, n, options.gl_cap);
  Pi0Presentation out;
  out.ring = a->label();
  out.n = n;
  out.degree = d;
  out.group_order = g.order();

  Kv1Core core;
  for (unsigned dd = 1; dd <= d; ++dd) {
    core = identify(g, dd, options);
    out.monotone_history.push_back(g.order() / core.members.size());
  }
  for (std::size_t i = 1; i < out.monotone_history.size(); ++i)
    if (out.monotone_history[i] > out.monotone_history[i - 1]) out.monotone = false;
  out.candidates = core.candidates;
  out.skipped_known = core.skipped_known;
  out.skipped_unknown = core.skipped_unknown;
  out.rejected = core.rejected;
  out.generators = core.gens;

  // Normality; fall back to the normal closure (still inside the true subgroup).
  for (std::size_t h : core.gens)
    for (std::size_t x = 0; x < g.order(); ++x)
      if (!core.in_h[g.mul(g.mul(x, h), g.inverse[x])]) out.normal = false;
  if (!out.normal) {
    std::vector<std::size_t> conj;
    for (std::size_t h : core.gens)
      for (std::size_t x = 0; x < g.order(); ++x) conj.push_back(g.mul(g.mul(x, h), g.inverse[x]));
    for (std::size_t c : conj)
      if (!core.in_h[c]) {
        core.in_h[c] = true;
        core.members.push_back(c);
      }
    close_subgroup(g, core.in_h, core.members, conj);
  }
  std::sort(core.members.begin(), core.members.end());
  out.subgroup = core.members;
  out.subgroup_order = core.members.size();

  // Cosets x H.
  out.class_of.assign(g.order(), SIZE_MAX);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (out.class_of[x] != SIZE_MAX) continue;
    const std::size_t label = reps.size();
    reps.push_back(x);
    for (std::size_t h : core.members) out.class_of[g.mul(x, h)] = label;
  }
  out.order = reps.size();
  for (std::size_t r : reps) out.representatives.push_back(g.elements[r]);

  const std::size_t q = reps.size();
  for (std::size_t i = 0; i < q && out.abelian; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (out.class_of[g.mul(reps[i], reps[j])] != out.class_of[g.mul(reps[j], reps[i])]) {
        out.abelian = false;
        break;
      }
  if (out.abelian) {
    IntMatrix rel(q * q + 1, q);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        std::size_t row = i * q + j;
        rel(row, i) += 1;
        rel(row, j) += 1;
        rel(row, out.class_of[g.mul(reps[i], reps[j])]) -= 1;
      }
    rel(q * q, out.class_of[0]) = 1;
    SmithForm snf = smith_normal_form(rel);
    for (const BigInt& v : snf.invariants())
      if (v != 1) out.invariant_factors.push_back(v);
  }

  // Determinant side certificate: det(I + M) is constant along paths over a
  // reduced commutative unital ring, so the quotient cannot be smaller than its image.
  const FiniteRing& ring = *a;
  if (ring.unit() && is_commutative(ring) && is_reduced(ring)) {
    out.determinant.applicable = true;
    std::set<RingElem> image;
    for (const Matrix& m : g.elements) image.insert(determinant(unit_matrix(a, n) + m).constant_term());
    out.determinant.image_order = image.size();
    out.determinant.exact = image.size() == out.order;
  }
  return out;
}

StabilizationCheck check_stabilization(const RingPtr& a, std::size_t n, unsigned d, const Kv1Options& options) {
  StabilizationCheck out;
  GlGroup small = gl_group(a, n, options.gl_cap);
  GlGroup big = gl_group(a, n + 1, options.gl_cap);
  for (std::size_t x = 0; x < small.order(); ++x)
    for (std::size_t y = 0; y < small.order(); ++y) {
      Matrix lhs = circle(small.elements[x], small.elements[y]).stabilize();
      Matrix rhs = circle(small.elements[x].stabilize(), small.elements[y].stabilize());
      if (!(lhs == rhs)) out.homomorphism = false;
    }
  Pi0Presentation p = kv1_approx(a, n, d, options);
  Pi0Presentation q = kv1_approx(a, n + 1, d, options);
  std::set<std::size_t> big_subgroup(q.subgroup.begin(), q.subgroup.end());
  for (std::size_t h : p.subgroup)
    if (!big_subgroup.count(big.id_of(small.elements[h].stabilize()))) out.preserves_relation = false;
  out.classes_n = p.order;
  out.classes_n1 = q.order;
  return out;
}

}  // namespace hotring
