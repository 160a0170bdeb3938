#pragma once

#include <map>
#include <set>
#include <vector>

#include "zcat/laurent.hpp"
#include "zcat/ratfunc.hpp"

namespace zcat {

// Sparse vector over the Laurent ring, keyed by stable indices.
using SparseVec = std::map<int, LaurentPoly>;

/// Column-major sparse matrix over Q[t1^+-,...,tr^+-].
struct SparseLaurentMatrix {
  int rows = 0;
  int cols = 0;
  int num_vars = 0;
  std::vector<SparseVec> col;  // col[j]: row -> entry

  SparseLaurentMatrix() = default;
  SparseLaurentMatrix(int rows_, int cols_, int num_vars_)
      : rows(rows_), cols(cols_), num_vars(num_vars_), col(cols_) {}

  void set(int i, int j, LaurentPoly v) {
    if (!v.is_zero()) col[j][i] = std::move(v);
  }
  LaurentPoly get(int i, int j) const {
    auto it = col[j].find(i);
    return it == col[j].end() ? LaurentPoly(num_vars) : it->second;
  }
  size_t entry_count() const {
    size_t n = 0;
    for (const auto& c : col) n += c.size();
    return n;
  }
  SparseLaurentMatrix transposed() const;
  // Entrywise t_i -> t_i^{-1}.
  SparseLaurentMatrix involution() const;
  // Apply to a sparse column vector.
  SparseVec apply(const SparseVec& x) const;
  // Matrix product (used by the chain-complex identity tests).
  SparseLaurentMatrix operator*(const SparseLaurentMatrix& o) const;
  bool is_zero() const;
};

/**
 * Sparse row-echelon elimination over the Laurent ring.
 *
 * Pivots on unit monomials first (row operations stay in the ring, rows are
 * re-normalized by content and unit monomial), with Markowitz-style pivot
 * selection to limit fill.  Whatever block remains without unit entries is
 * finished densely over the fraction field.  This yields exact rank, solve,
 * and nullspace extraction for matrices far beyond the dense range as long as
 * the input is mostly monomial, which twisted boundary matrices are.
 */
class SparseGauss {
 public:
  explicit SparseGauss(const SparseLaurentMatrix& m, int augmented_cols = 0);

  // Runs the full elimination (idempotent).
  void eliminate();

  int rank() const { return static_cast<int>(pivots_.size()); }

  // Solves M x = b for one right-hand side loaded as augmented column 0.
  // Returns false when inconsistent.
  bool solve(std::vector<RatFunc>* x);

  // Nullspace basis vector for each non-pivot column, computed lazily.
  std::vector<int> free_columns() const;
  std::vector<RatFunc> nullspace_vector(int free_col);

  void load_augmented(int slot, const SparseVec& b);

 private:
  struct Pivot {
    int row, col;
  };

  void normalize_row(int r);
  long long markowitz_cost(int r, int c) const;
  const LaurentPoly& entry(int r, int c) const;
  void row_update(int target, int source, const LaurentPoly& multiplier);
  void dense_tail();
  std::vector<RatFunc> back_substitute(const std::map<int, RatFunc>& fixed);

  int rows_, cols_, aug_, num_vars_;
  std::vector<std::map<int, LaurentPoly>> row_;  // row -> (col -> entry), cols < cols_+aug_
  std::vector<std::set<int>> col_rows_;          // col -> active rows with a nonzero
  std::vector<bool> row_active_;
  std::vector<bool> col_open_;
  std::vector<Pivot> pivots_;  // elimination order
  bool done_ = false;
};

// Exact rank of a sparse Laurent matrix (unit pivots + dense tail).
int sparse_rank_exact(const SparseLaurentMatrix& m);

// Rank after evaluating every entry at the given point (exact over Q).
int sparse_rank_evaluated(const SparseLaurentMatrix& m, const std::vector<Rat>& point);

}  // namespace zcat
