#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ronco/lincomb.hpp"
#include "ronco/rational.hpp"

namespace ronco {

using Vector = std::vector<Rational>;
using SparseVector = LinComb<std::size_t>;

SparseVector to_sparse(std::span<const Rational> v);
Vector to_dense(const SparseVector& v, std::size_t n);

/// rows x cols matrix of exact rationals; zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix from_dense(const std::vector<Vector>& rows);
  /// Each vector becomes one column.
  static SparseMatrix from_columns(std::size_t rows, std::span<const SparseVector> columns);
  static SparseMatrix from_rows(std::size_t cols, std::span<const SparseVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }

  void set(std::size_t r, std::size_t c, const Rational& v);
  void add(std::size_t r, std::size_t c, const Rational& v);
  Rational at(std::size_t r, std::size_t c) const;

  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const { return entries_; }

  Vector apply(std::span<const Rational> v) const;
  SparseMatrix transpose() const;
  std::vector<SparseVector> row_vectors() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void check(std::size_t r, std::size_t c) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);

struct RankKernel {
  std::size_t rank = 0;
  /// One vector per free column, free columns in increasing order, with a 1
  /// in its own free column and 0 in every other free column.
  std::vector<Vector> kernel;
};

/// Fraction-free elimination over the integers after clearing row
/// denominators. Pivots: columns left to right, first remaining row in index
/// order with a nonzero entry.
RankKernel rank_and_kernel(const SparseMatrix& m);
std::size_t rank(const SparseMatrix& m);

/// ambient_dim - rank(relations). Throws DimensionMismatch on length mismatch.
std::size_t quotient_dim(std::size_t ambient_dim, std::span<const Vector> relations);
std::size_t quotient_dim(std::size_t ambient_dim, std::span<const SparseVector> relations);

/// Subspace of Q^n kept in reduced row echelon form; grows by insertion.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Residual of v after eliminating all pivot coordinates; zero iff v is in the span.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Returns true if v was independent of the current span.
  bool insert(const SparseVector& v);

  /// RREF rows ordered by pivot column.
  std::vector<SparseVector> basis() const;
  std::vector<std::size_t> pivots() const;
  /// Coordinates that are not pivots, in increasing order.
  std::vector<std::size_t> non_pivots() const;

  bool same_span(const Subspace& other) const;

 private:
  std::size_t ambient_;
  std::map<std::size_t, SparseVector> rows_;  // pivot column -> row with 1 at pivot
};

}  // namespace ronco
