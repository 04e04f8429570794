#include "ronco/linalg.hpp"

#include <algorithm>
#include <string>

#include "ronco/errors.hpp"

namespace ronco {

SparseVector to_sparse(std::span<const Rational> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.add(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& [i, c] : v) {
    if (i >= n) throw DimensionMismatch("sparse index " + std::to_string(i) + " out of range " + std::to_string(n));
    out[i] = c;
  }
  return out;
}

// ---------------------------------------------------------------------------
// SparseMatrix

void SparseMatrix::check(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_)
    throw DimensionMismatch("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (v == 0)
    entries_.erase({r, c});
  else
    entries_[{r, c}] = v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  check(r, c);
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational SparseMatrix::at(std::size_t r, std::size_t c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::span<const SparseVector> columns) {
  SparseMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m.set(r, c, v);
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::span<const SparseVector> rows) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) m.set(r, c, v);
  return m;
}

Vector SparseMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw DimensionMismatch("vector length does not match matrix columns");
  Vector out(rows_);
  for (const auto& [rc, x] : entries_) out[rc.first] += x * v[rc.second];
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (const auto& [rc, x] : entries_) t.entries_.emplace(std::pair{rc.second, rc.first}, x);
  return t;
}

std::vector<SparseVector> SparseMatrix::row_vectors() const {
  std::vector<SparseVector> out(rows_);
  for (const auto& [rc, x] : entries_) out[rc.first].add(rc.second, x);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  auto brows = b.row_vectors();
  SparseMatrix out(a.rows(), b.cols());
  for (const auto& [rc, x] : a.entries())
    for (const auto& [c, y] : brows[rc.second]) out.add(rc.first, c, x * y);
  return out;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

using IntRow = std::map<std::size_t, Integer>;

IntRow integer_row(const SparseVector& v) {
  Integer l = 1;
  for (const auto& [c, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow row;
  for (const auto& [c, x] : v) row.emplace(c, x.get_num() * (l / x.get_den()));
  return row;
}

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& [c, x] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, x] : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// row <- pivot_value * row - factor * pivot_row; the entry at the pivot column cancels.
void eliminate(IntRow& row, const IntRow& pivot_row, const Integer& pivot_value, const Integer& factor) {
  for (auto& [c, x] : row) x *= pivot_value;
  for (const auto& [c, y] : pivot_row) {
    auto [it, inserted] = row.try_emplace(c, 0);
    it->second -= factor * y;
    if (it->second == 0) row.erase(it);
  }
  make_primitive(row);
}

struct Echelon {
  std::vector<IntRow> rows;          // upper-triangular pivot rows
  std::vector<std::size_t> pivots;   // pivot column of each row, increasing
};

Echelon echelon(const SparseMatrix& m) {
  std::vector<IntRow> active;
  for (const auto& v : m.row_vectors())
    if (!v.empty()) {
      active.push_back(integer_row(v));
      make_primitive(active.back());
    }

  Echelon out;
  std::vector<bool> used(active.size(), false);
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = active.size();
    for (std::size_t r = 0; r < active.size(); ++r)
      if (!used[r] && active[r].count(col)) {
        pivot = r;
        break;
      }
    if (pivot == active.size()) continue;
    used[pivot] = true;
    const IntRow& prow = active[pivot];
    const Integer pv = prow.at(col);
    for (std::size_t r = 0; r < active.size(); ++r) {
      if (used[r]) continue;
      auto it = active[r].find(col);
      if (it == active[r].end()) continue;
      Integer factor = it->second;
      eliminate(active[r], prow, pv, factor);
    }
    out.rows.push_back(prow);
    out.pivots.push_back(col);
  }
  return out;
}

}  // namespace

RankKernel rank_and_kernel(const SparseMatrix& m) {
  Echelon e = echelon(m);
  RankKernel out;
  out.rank = e.rows.size();

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = 1;
    for (std::size_t k = e.rows.size(); k-- > 0;) {
      const std::size_t pc = e.pivots[k];
      Rational s = 0;
      for (const auto& [c, a] : e.rows[k])
        if (c != pc && x[c] != 0) s += Rational(a) * x[c];
      if (s != 0) x[pc] = -s / Rational(e.rows[k].at(pc));
    }
    out.kernel.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(const SparseMatrix& m) { return echelon(m).rows.size(); }

std::size_t quotient_dim(std::size_t ambient_dim, std::span<const SparseVector> relations) {
  for (const auto& r : relations)
    for (const auto& [i, c] : r)
      if (i >= ambient_dim) throw DimensionMismatch("relation index out of range");
  // Rows of the elimination are the relations; duplicates change nothing.
  return ambient_dim - rank(SparseMatrix::from_rows(ambient_dim, relations));
}

std::size_t quotient_dim(std::size_t ambient_dim, std::span<const Vector> relations) {
  std::vector<SparseVector> sparse;
  sparse.reserve(relations.size());
  for (const auto& r : relations) {
    if (r.size() != ambient_dim)
      throw DimensionMismatch("relation of length " + std::to_string(r.size()) + " in ambient dimension " +
                              std::to_string(ambient_dim));
    sparse.push_back(to_sparse(r));
  }
  return quotient_dim(ambient_dim, std::span<const SparseVector>(sparse));
}

// ---------------------------------------------------------------------------
// Subspace

SparseVector Subspace::reduce(SparseVector v) const {
  for (const auto& [i, c] : v)
    if (i >= ambient_) throw DimensionMismatch("vector index out of subspace ambient range");
  for (const auto& [pivot, row] : rows_) {
    Rational c = v.coeff(pivot);
    if (c != 0) v.add(row, -c);
  }
  return v;
}

bool Subspace::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.empty()) return false;
  const std::size_t pivot = r.begin()->first;
  r *= 1 / r.begin()->second;
  for (auto& [p, row] : rows_) {
    Rational c = row.coeff(pivot);
    if (c != 0) row.add(r, -c);
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

std::vector<SparseVector> Subspace::basis() const {
  std::vector<SparseVector> out;
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!rows_.count(i)) out.push_back(i);
  return out;
}

bool Subspace::same_span(const Subspace& other) const {
  return ambient_ == other.ambient_ && rows_ == other.rows_;
}

}  // namespace ronco
