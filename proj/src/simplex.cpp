#include "hotring/simplex.hpp"

#include <string>

namespace hotring {

VarId simplex_var(int j) {
  if (j < 1) throw IndexOutOfRange("simplex variable t_" + std::to_string(j) + " is eliminated");
  return var("t" + std::to_string(j));
}

IntPoly simplex_coordinate(int n, int j) {
  if (j < 0 || j > n) throw IndexOutOfRange("t_" + std::to_string(j) + " at level " + std::to_string(n));
  if (j > 0) return IntPoly::variable(simplex_var(j));
  IntPoly t0(1);
  for (int k = 1; k <= n; ++k) t0 -= IntPoly::variable(simplex_var(k));
  return t0;
}

std::vector<VarId> simplex_vars(int n) {
  std::vector<VarId> out;
  for (int j = 1; j <= n; ++j) out.push_back(simplex_var(j));
  return out;
}

namespace {

void check_level(const Poly& p, int n) {
  for (VarId v : p.vars()) {
    const std::string& name = var_name(v);
    if (name.size() > 1 && name[0] == 't' && name.find_first_not_of("0123456789", 1) == std::string::npos &&
        std::stoi(name.substr(1)) > n)
      throw IndexOutOfRange("element mentions " + name + " but lives at level " + std::to_string(n));
  }
}

}  // namespace

Poly face(const Poly& p, int n, int i) {
  if (n < 1 || i < 0 || i > n)
    throw IndexOutOfRange("face d_" + std::to_string(i) + " at level " + std::to_string(n));
  check_level(p, n);
  std::map<VarId, IntPoly> sub;
  for (int j = 1; j <= n; ++j) {
    if (j < i)
      sub[simplex_var(j)] = simplex_coordinate(n - 1, j);
    else if (j == i)
      sub[simplex_var(j)] = IntPoly(0);
    else
      sub[simplex_var(j)] = simplex_coordinate(n - 1, j - 1);
  }
  return p.substitute(sub);
}

Poly degeneracy(const Poly& p, int n, int i) {
  if (n < 0 || i < 0 || i > n)
    throw IndexOutOfRange("degeneracy s_" + std::to_string(i) + " at level " + std::to_string(n));
  check_level(p, n);
  std::map<VarId, IntPoly> sub;
  for (int j = 1; j <= n; ++j) {
    if (j < i)
      sub[simplex_var(j)] = simplex_coordinate(n + 1, j);
    else if (j == i)
      sub[simplex_var(j)] = simplex_coordinate(n + 1, j) + simplex_coordinate(n + 1, j + 1);
    else
      sub[simplex_var(j)] = simplex_coordinate(n + 1, j + 1);
  }
  return p.substitute(sub);
}

Poly to_simplex1(const Poly& p, VarId t) { return p.substitute({{t, simplex_coordinate(1, 0)}}); }

int face_of_vertex(int i, int k) { return k <= i ? i - 1 : i; }
int degeneracy_of_vertex(int i, int k) { return k <= i ? i + 1 : i; }

Poly contraction_map(const Poly& p, VarId x, int n, int i) {
  if (i < -1 || i > n) throw IndexOutOfRange("vertex v(" + std::to_string(i) + ") at level " + std::to_string(n));
  IntPoly factor(0);
  for (int j = 0; j <= i; ++j) factor += simplex_coordinate(n, j);
  return p.substitute({{x, IntPoly::variable(x) * factor}});
}

Poly random_simplex_elem(const RingPtr& ring, int n, Rng& rng, unsigned max_degree, unsigned max_terms,
                         std::optional<VarId> extra) {
  std::vector<VarId> vars = simplex_vars(n);
  if (extra) vars.push_back(*extra);
  return random_poly(ring, vars, max_degree, max_terms, rng);
}

}  // namespace hotring
