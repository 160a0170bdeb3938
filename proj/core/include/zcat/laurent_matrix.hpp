#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zcat/laurent.hpp"
#include "zcat/ratfunc.hpp"
#include "zcat/sparse.hpp"

namespace zcat {

/// Dense matrix over Q[t1^+-,...,tr^+-].
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(int rows, int cols, int num_vars)
      : rows_(rows), cols_(cols), num_vars_(num_vars),
        data_(size_t(rows) * cols, LaurentPoly(num_vars)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_vars() const { return num_vars_; }
  LaurentPoly& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
  const LaurentPoly& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

  SparseLaurentMatrix to_sparse() const;
  static LaurentMatrix from_sparse(const SparseLaurentMatrix& s);

 private:
  int rows_ = 0, cols_ = 0, num_vars_ = 0;
  std::vector<LaurentPoly> data_;
};

struct RankOptions {
  enum class Mode { kAuto, kExact, kRandomized };
  Mode mode = Mode::kAuto;
  std::uint64_t seed = 0xC0FFEE;
  int trials = 2;
  // Auto mode: dense fraction-free elimination up to this many columns,
  // randomized evaluation above (multivariate elimination growth).
  int exact_col_limit = 300;
};

struct RankResult {
  int rank = 0;
  bool probabilistic = false;
};

// Rank over the fraction field Q(H).
RankResult rank_fraction_field(const SparseLaurentMatrix& m, const RankOptions& opt = {});
RankResult rank_fraction_field(const LaurentMatrix& m, const RankOptions& opt = {});

// Fraction-free Bareiss elimination rank (exact, dense).
int bareiss_rank(const LaurentMatrix& m);

// Draws an evaluation point with coordinates p/q, 1 <= p,q <= 10^6.
std::vector<Rat> random_rational_point(int num_vars, std::uint64_t seed, int trial);

// Exact linear solve over the fraction field; nullopt when inconsistent.
std::optional<std::vector<RatFunc>> solve_linear(const std::vector<std::vector<RatFunc>>& m,
                                                 const std::vector<RatFunc>& b);

// Invariant factors over the PID Q[t,t^-1], monic, units stripped, e1 | e2 | ...
// Requires num_vars == 1 (or 0-column/0-row degenerate shapes).
std::vector<LaurentPoly> snf_laurent_pid(const LaurentMatrix& m);

// Full form with transforms: d = u * m * v over Q[t,t^-1], u and v invertible.
struct LaurentPidSnf {
  std::vector<LaurentPoly> diagonal;
  LaurentMatrix u, v;
};
LaurentPidSnf snf_laurent_pid_full(const LaurentMatrix& m);

// Basis of the free module ker(m) over Q[t,t^-1], as matrix columns.
LaurentMatrix laurent_pid_kernel_basis(const LaurentMatrix& m);

// Solves m * y = b over Q[t,t^-1]; false when unsolvable over the ring.
bool laurent_pid_solve(const LaurentMatrix& m, const LaurentMatrix& b, LaurentMatrix* y);

}  // namespace zcat
