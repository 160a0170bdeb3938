#pragma once

#include <vector>

#include "zcat/rational.hpp"

namespace zcat {

/// Dense matrix with arbitrary-precision integer entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}

  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  bool operator==(const IntegerMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  IntegerMatrix operator*(const IntegerMatrix& o) const;
  IntegerMatrix transposed() const;
  bool is_zero() const;

  Int determinant() const;  // Bareiss; square only

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

struct SnfResult {
  IntegerMatrix d;  // diagonal, d1 | d2 | ... >= 0
  IntegerMatrix u;  // unimodular, d = u * m * v
  IntegerMatrix v;  // unimodular
};

// Smith normal form over Z.
SnfResult snf_integer(const IntegerMatrix& m);

// Basis of the integer kernel lattice {x : m x = 0} as matrix columns.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& m);

// Solves m * y = b over Z column-by-column; empty result when unsolvable.
// b may have several columns.
bool integer_solve(const IntegerMatrix& m, const IntegerMatrix& b, IntegerMatrix* y);

int rank_rational(const IntegerMatrix& m);

}  // namespace zcat
