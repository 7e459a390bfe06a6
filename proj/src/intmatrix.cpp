#include "hotring/intmatrix.hpp"

#include <sstream>

namespace hotring {

namespace {

BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

}  // namespace

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt mm = abs_value(m);
  BigInt r = a % mm;
  if (r < 0) r += mm;
  return r;
}

std::vector<BigInt> SmithForm::invariants() const {
  std::vector<BigInt> out;
  std::size_t n = std::min(diag.rows(), diag.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(diag(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), IntMatrix::identity(n), 0};
  IntMatrix& d = s.diag;

  auto row_add = [&](std::size_t i, std::size_t j, const BigInt& c) {
    d.add_row_multiple(i, j, c);
    s.left.add_row_multiple(i, j, c);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    s.left.swap_rows(i, j);
  };
  // Column operations act on right; right_inverse receives the inverse row operation.
  auto col_add = [&](std::size_t i, std::size_t j, const BigInt& c) {
    d.add_col_multiple(i, j, c);
    s.right.add_col_multiple(i, j, c);
    s.right_inverse.add_row_multiple(j, i, BigInt(-c));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    s.right.swap_cols(i, j);
    s.right_inverse.swap_rows(i, j);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      bool found = false;
      std::size_t pr = t, pc = t;
      BigInt best;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          if (d(r, c) == 0) continue;
          BigInt v = abs_value(d(r, c));
          if (!found || v < best) {
            found = true;
            best = v;
            pr = r;
            pc = c;
          }
        }
      if (!found) {
        s.rank = t;
        return s;
      }
      row_swap(t, pr);
      col_swap(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (d(r, t) == 0) continue;
        BigInt q = d(r, t) / d(t, t);
        row_add(r, t, BigInt(-q));
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (d(t, c) == 0) continue;
        BigInt q = d(t, c) / d(t, t);
        col_add(c, t, BigInt(-q));
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides_all = true;
      for (std::size_t r = t + 1; r < m && divides_all; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (d(r, c) % d(t, t) != 0) {
            row_add(t, r, BigInt(1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.left.negate_row(t);
    }
  }
  s.rank = 0;
  for (std::size_t t = 0; t < steps; ++t)
    if (d(t, t) != 0) s.rank = t + 1;
  return s;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t c = s.rank; c < a.cols(); ++c) {
    IntVector z(a.cols());
    for (std::size_t r = 0; r < a.cols(); ++r) z[r] = s.right(r, c);
    basis.push_back(std::move(z));
  }
  return basis;
}

std::optional<IntVector> solve_integer(const SmithForm& snf, const IntVector& v) {
  const std::size_t m = snf.left.rows(), n = snf.right.rows();
  IntVector lv(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      if (snf.left(i, k) != 0) lv[i] += snf.left(i, k) * v[k];
  IntVector w(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < snf.rank) {
      const BigInt& p = snf.diag(i, i);
      if (lv[i] % p != 0) return std::nullopt;
      w[i] = lv[i] / p;
    } else if (lv[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < snf.rank; ++k)
      if (w[k] != 0) z[i] += snf.right(i, k) * w[k];
  return z;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& v) {
  return solve_integer(smith_normal_form(a), v);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  os << "]";
  return os.str();
}

}  // namespace hotring
