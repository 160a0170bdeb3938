#include "zcat/sparse.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace zcat {

SparseLaurentMatrix SparseLaurentMatrix::transposed() const {
  SparseLaurentMatrix t(cols, rows, num_vars);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[j]) t.col[i][j] = v;
  return t;
}

SparseLaurentMatrix SparseLaurentMatrix::involution() const {
  SparseLaurentMatrix t(rows, cols, num_vars);
  for (int j = 0; j < cols; ++j)
    for (const auto& [i, v] : col[j]) t.col[j][i] = v.involution();
  return t;
}

SparseVec SparseLaurentMatrix::apply(const SparseVec& x) const {
  SparseVec y;
  for (const auto& [j, xv] : x) {
    for (const auto& [i, m] : col[j]) {
      auto [it, fresh] = y.emplace(i, LaurentPoly(num_vars));
      it->second += m * xv;
      if (it->second.is_zero()) y.erase(it);
    }
  }
  return y;
}

SparseLaurentMatrix SparseLaurentMatrix::operator*(const SparseLaurentMatrix& o) const {
  if (cols != o.rows) throw std::logic_error("sparse product shape mismatch");
  SparseLaurentMatrix r(rows, o.cols, num_vars);
  for (int j = 0; j < o.cols; ++j) r.col[j] = apply(o.col[j]);
  return r;
}

bool SparseLaurentMatrix::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

SparseGauss::SparseGauss(const SparseLaurentMatrix& m, int augmented_cols)
    : rows_(m.rows),
      cols_(m.cols),
      aug_(augmented_cols),
      num_vars_(m.num_vars),
      row_(m.rows),
      col_rows_(m.cols + augmented_cols),
      row_active_(m.rows, true),
      col_open_(m.cols, true) {
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : m.col[j]) {
      row_[i][j] = v;
      col_rows_[j].insert(i);
    }
  for (int i = 0; i < rows_; ++i) normalize_row(i);
}

void SparseGauss::load_augmented(int slot, const SparseVec& b) {
  if (done_) throw std::logic_error("augmented column loaded after elimination");
  int c = cols_ + slot;
  for (const auto& [i, v] : b) {
    if (v.is_zero()) continue;
    row_[i][c] = v;
    col_rows_[c].insert(i);
    normalize_row(i);
  }
}

const LaurentPoly& SparseGauss::entry(int r, int c) const {
  static const LaurentPoly kZero;
  auto it = row_[r].find(c);
  return it == row_[r].end() ? kZero : it->second;
}

void SparseGauss::normalize_row(int r) {
  if (r < 0 || row_[r].empty()) return;
  LaurentPoly::Exps shift(num_vars_, 0);
  Rat content(0);
  bool first = true;
  for (const auto& [c, v] : row_[r]) {
    LaurentPoly::Exps m = v.min_exponents();
    if (first) {
      shift = m;
      first = false;
    } else {
      for (int i = 0; i < num_vars_; ++i) shift[i] = std::min(shift[i], m[i]);
    }
    Rat cv = v.content();
    content = content == 0 ? cv
                           : Rat(gcd(num(content) * den(cv), num(cv) * den(content)),
                                 den(content) * den(cv));
  }
  bool trivial = content == 1;
  for (int i = 0; i < num_vars_ && trivial; ++i) trivial = shift[i] == 0;
  if (trivial) return;
  for (int i = 0; i < num_vars_; ++i) shift[i] = -shift[i];
  Rat inv = Rat(1) / content;
  for (auto& [c, v] : row_[r]) v = v.mul_monomial(shift, inv);
}

long long SparseGauss::markowitz_cost(int r, int c) const {
  return (static_cast<long long>(row_[r].size()) - 1) *
         (static_cast<long long>(col_rows_[c].size()) - 1);
}

void SparseGauss::row_update(int target, int source, const LaurentPoly& multiplier) {
  // row[target] -= multiplier * row[source]
  for (const auto& [c, v] : row_[source]) {
    LaurentPoly delta = multiplier * v;
    if (delta.is_zero()) continue;
    auto it = row_[target].find(c);
    if (it == row_[target].end()) {
      row_[target].emplace(c, -delta);
      col_rows_[c].insert(target);
    } else {
      it->second -= delta;
      if (it->second.is_zero()) {
        row_[target].erase(it);
        col_rows_[c].erase(target);
      }
    }
  }
  normalize_row(target);
}

void SparseGauss::eliminate() {
  if (done_) return;
  done_ = true;

  struct Cand {
    long long cost;
    int row, col;
    bool operator>(const Cand& o) const {
      return cost > o.cost || (cost == o.cost && (col > o.col || (col == o.col && row > o.row)));
    }
  };
  std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>> heap;
  auto push_row_units = [&](int r) {
    for (const auto& [c, v] : row_[r])
      if (c < cols_ && col_open_[c] && v.is_unit_monomial())
        heap.push({markowitz_cost(r, c), r, c});
  };
  for (int r = 0; r < rows_; ++r) push_row_units(r);

  while (!heap.empty()) {
    Cand cand = heap.top();
    heap.pop();
    if (!row_active_[cand.row] || !col_open_[cand.col]) continue;
    auto it = row_[cand.row].find(cand.col);
    if (it == row_[cand.row].end() || !it->second.is_unit_monomial()) continue;
    long long cost = markowitz_cost(cand.row, cand.col);
    if (cost > cand.cost) {  // stale priority: requeue
      heap.push({cost, cand.row, cand.col});
      continue;
    }

    LaurentPoly inv = it->second.unit_inverse();
    std::vector<int> victims(col_rows_[cand.col].begin(), col_rows_[cand.col].end());
    row_active_[cand.row] = false;
    col_open_[cand.col] = false;
    for (int r : victims) {
      if (r == cand.row || !row_active_[r]) continue;
      LaurentPoly mult = entry(r, cand.col) * inv;
      row_update(r, cand.row, mult);
      push_row_units(r);
    }
    pivots_.push_back({cand.row, cand.col});
  }
  dense_tail();
}

void SparseGauss::dense_tail() {
  // Finish whatever block has no unit entries left; fraction-free row-scaled
  // updates with content stripping.  Fill can repopulate columns, so sweep
  // until every open column is empty among active rows.
  for (bool progressed = true; progressed;) {
    progressed = false;
    for (int c = 0; c < cols_; ++c) {
      if (!col_open_[c]) continue;
      int pick = -1;
      int fewest = std::numeric_limits<int>::max();
      for (int r : col_rows_[c]) {
        if (!row_active_[r]) continue;
        int tc = row_[r].find(c)->second.term_count();
        if (tc < fewest) {
          fewest = tc;
          pick = r;
        }
      }
      if (pick < 0) continue;
      const LaurentPoly pivot = entry(pick, c);
      std::vector<int> victims(col_rows_[c].begin(), col_rows_[c].end());
      row_active_[pick] = false;
      col_open_[c] = false;
      for (int r : victims) {
        if (r == pick || !row_active_[r]) continue;
        LaurentPoly a = entry(r, c);
        for (auto& [cc, v] : row_[r]) v = v * pivot;
        row_update(r, pick, a);
      }
      pivots_.push_back({pick, c});
      progressed = true;
    }
  }
}

std::vector<int> SparseGauss::free_columns() const {
  std::vector<int> free;
  std::vector<bool> pivoted(cols_, false);
  for (const Pivot& p : pivots_) pivoted[p.col] = true;
  for (int c = 0; c < cols_; ++c)
    if (!pivoted[c]) free.push_back(c);
  return free;
}

std::vector<RatFunc> SparseGauss::back_substitute(const std::map<int, RatFunc>& fixed) {
  // Pivot rows read  sum_c M[r][c] x_c = b_r  with b_r stored (if at all) in
  // the augmented column; non-pivot non-fixed coordinates are zero.
  std::vector<RatFunc> x(cols_, RatFunc(LaurentPoly(num_vars_)));
  for (const auto& [c, v] : fixed) x[c] = v;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    RatFunc acc = RatFunc(LaurentPoly(num_vars_));
    RatFunc pivot_val;
    for (const auto& [c, v] : row_[it->row]) {
      if (c == it->col) {
        pivot_val = RatFunc(v);
      } else if (c >= cols_) {
        acc -= RatFunc(v);  // right-hand side
      } else if (!x[c].is_zero()) {
        acc += RatFunc(v) * x[c];
      }
    }
    x[it->col] = -acc / pivot_val;
  }
  return x;
}

bool SparseGauss::solve(std::vector<RatFunc>* x) {
  eliminate();
  for (int r = 0; r < rows_; ++r) {
    if (!row_active_[r] || row_[r].empty()) continue;
    bool touches_real = false;
    for (const auto& [c, v] : row_[r])
      if (c < cols_) {
        touches_real = true;
        break;
      }
    if (!touches_real) return false;  // 0 = nonzero rhs
  }
  *x = back_substitute({});
  return true;
}

std::vector<RatFunc> SparseGauss::nullspace_vector(int free_col) {
  eliminate();
  return back_substitute({{free_col, RatFunc::constant(num_vars_, 1)}});
}

int sparse_rank_exact(const SparseLaurentMatrix& m) {
  SparseGauss g(m);
  g.eliminate();
  return g.rank();
}

int sparse_rank_evaluated(const SparseLaurentMatrix& m, const std::vector<Rat>& point) {
  SparseLaurentMatrix ev(m.rows, m.cols, 0);
  for (int j = 0; j < m.cols; ++j)
    for (const auto& [i, v] : m.col[j]) {
      Rat val = v.evaluate(point);
      if (val != 0) ev.col[j].emplace(i, LaurentPoly::constant(0, val));
    }
  return sparse_rank_exact(ev);
}

}  // namespace zcat
