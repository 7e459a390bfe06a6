#pragma once

// Dense integer matrices, Smith normal form and integer kernels.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hotring {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row_i += c * row_j
  void add_row_multiple(std::size_t i, std::size_t j, const Scalar& c) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
  }
  // col_i += c * col_j
  void add_col_multiple(std::size_t i, std::size_t j, const Scalar& c) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }
  void negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

using IntMatrix = DenseMatrix<BigInt>;
using IntVector = std::vector<BigInt>;

/// left * input * right == diag, with left/right unimodular, diag(i,i) >= 0 and
/// diag(i,i) | diag(i+1,i+1). right_inverse is kept alongside so callers never
/// have to invert a unimodular matrix.
struct SmithForm {
  IntMatrix left, diag, right, right_inverse;
  std::size_t rank = 0;

  std::vector<BigInt> invariants() const;  // diagonal entries, length min(rows, cols)
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis of {z in Z^n : a z = 0}.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// Some z with a z = v, or nullopt when no integer solution exists.
std::optional<IntVector> solve_integer(const SmithForm& snf, const IntVector& v);
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& v);

/// Euclidean remainder in [0, |m|).
BigInt mod_floor(const BigInt& a, const BigInt& m);

std::string to_string(const IntMatrix& m);

}  // namespace hotring
