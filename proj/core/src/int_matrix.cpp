#include "zcat/int_matrix.hpp"

#include <cstdlib>
#include <stdexcept>

namespace zcat {

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
  if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
  IntegerMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Int& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntegerMatrix::is_zero() const {
  for (const Int& x : data_)
    if (x != 0) return false;
  return true;
}

Int IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::logic_error("determinant of non-square matrix");
  IntegerMatrix a = *this;
  const int n = rows_;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct SnfWork {
  IntegerMatrix a, u, v;

  void swap_rows(int i, int j) {
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  void add_row(int dst, int src, const Int& c) {  // row dst += c * row src
    for (int j = 0; j < a.cols(); ++j) a.at(dst, j) += c * a.at(src, j);
    for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += c * u.at(src, j);
  }
  void add_col(int dst, int src, const Int& c) {
    for (int i = 0; i < a.rows(); ++i) a.at(i, dst) += c * a.at(i, src);
    for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += c * v.at(i, src);
  }
  void negate_row(int i) {
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
    for (int j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
  }
};

}  // namespace

SnfResult snf_integer(const IntegerMatrix& m) {
  SnfWork w{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const int rows = m.rows(), cols = m.cols();
  const int steps = std::min(rows, cols);

  for (int k = 0; k < steps; ++k) {
    // Smallest nonzero |entry| in the trailing block as pivot.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = k; i < rows; ++i)
      for (int j = k; j < cols; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        Int ax = x < 0 ? Int(-x) : x;
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != k) w.swap_rows(k, pi);
    if (pj != k) w.swap_cols(k, pj);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = k + 1; i < rows; ++i) {
        if (w.a.at(i, k) == 0) continue;
        Int q = w.a.at(i, k) / w.a.at(k, k);
        if (q != 0) w.add_row(i, k, -q);
        if (w.a.at(i, k) != 0) {  // remainder smaller than pivot: swap up
          w.swap_rows(k, i);
          dirty = true;
        }
      }
      for (int j = k + 1; j < cols; ++j) {
        if (w.a.at(k, j) == 0) continue;
        Int q = w.a.at(k, j) / w.a.at(k, k);
        if (q != 0) w.add_col(j, k, -q);
        if (w.a.at(k, j) != 0) {
          w.swap_cols(k, j);
          dirty = true;
        }
      }
    }
    if (w.a.at(k, k) < 0) w.negate_row(k);
  }

  // Divisibility chain: fold a violating diagonal entry into its predecessor.
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int k = 0; k + 1 < steps; ++k) {
      const Int& d0 = w.a.at(k, k);
      const Int& d1 = w.a.at(k + 1, k + 1);
      if (d0 == 0 && d1 != 0) {
        w.swap_rows(k, k + 1);
        w.swap_cols(k, k + 1);
        dirty = true;
        continue;
      }
      if (d0 != 0 && d1 % d0 != 0) {
        w.add_col(k, k + 1, 1);
        // Re-reduce the 2x2 block with euclidean steps.
        while (w.a.at(k + 1, k) != 0) {
          Int q = w.a.at(k, k) / w.a.at(k + 1, k);
          w.add_row(k, k + 1, -q);
          if (w.a.at(k, k) == 0) {
            w.swap_rows(k, k + 1);
            continue;
          }
          q = w.a.at(k + 1, k) / w.a.at(k, k);
          w.add_row(k + 1, k, -q);
          if (w.a.at(k + 1, k) != 0) w.swap_rows(k, k + 1);
        }
        while (w.a.at(k, k + 1) != 0) {
          Int q = w.a.at(k, k + 1) / w.a.at(k, k);
          w.add_col(k + 1, k, -q);
          if (w.a.at(k, k + 1) != 0) w.swap_cols(k, k + 1);
        }
        if (w.a.at(k, k) < 0) w.negate_row(k);
        if (w.a.at(k + 1, k + 1) < 0) w.negate_row(k + 1);
        dirty = true;
      }
    }
  }
  return {w.a, w.u, w.v};
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& m) {
  SnfResult s = snf_integer(m);
  int r = 0;
  const int steps = std::min(m.rows(), m.cols());
  while (r < steps && s.d.at(r, r) != 0) ++r;
  IntegerMatrix k(m.cols(), m.cols() - r);
  for (int j = r; j < m.cols(); ++j)
    for (int i = 0; i < m.cols(); ++i) k.at(i, j - r) = s.v.at(i, j);
  return k;
}

bool integer_solve(const IntegerMatrix& m, const IntegerMatrix& b, IntegerMatrix* y) {
  if (m.rows() != b.rows()) throw std::logic_error("integer_solve shape mismatch");
  SnfResult s = snf_integer(m);
  IntegerMatrix ub = s.u * b;
  const int steps = std::min(m.rows(), m.cols());
  IntegerMatrix w(m.cols(), b.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int d = i < steps ? s.d.at(i, i) : Int(0);
    for (int j = 0; j < b.cols(); ++j) {
      if (d == 0) {
        if (ub.at(i, j) != 0) return false;
      } else {
        if (ub.at(i, j) % d != 0) return false;
        if (i < m.cols()) w.at(i, j) = ub.at(i, j) / d;
      }
    }
  }
  *y = s.v * w;
  return true;
}

int rank_rational(const IntegerMatrix& m) {
  SnfResult s = snf_integer(m);
  int r = 0;
  const int steps = std::min(m.rows(), m.cols());
  while (r < steps && s.d.at(r, r) != 0) ++r;
  return r;
}

}  // namespace zcat
