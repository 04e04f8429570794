#include "ronco/homology.hpp"

#include <string>

#include "ronco/errors.hpp"

namespace ronco {

std::size_t sym2_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // rows 0..i-1 contribute n, n-1, ..., n-i+1 entries
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::size_t wedge2_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= j) throw InvalidArgument("wedge index needs i < j");
  return i * (n - 1) - i * (i - 1) / 2 + (j - i - 1);
}

namespace {

void require(const StructureAlgebra& a, Variety v) {
  auto report = verify_variety(a, v);
  if (!report.ok()) throw VerificationFailure("input is not a " + to_string(v) + " algebra", std::move(report));
}

// Cycles independent modulo the boundaries, in kernel order.
std::vector<Vector> representatives(const std::vector<Vector>& cycles, Subspace boundaries) {
  std::vector<Vector> out;
  for (const auto& z : cycles)
    if (boundaries.insert(to_sparse(z))) out.push_back(z);
  return out;
}

Subspace column_space(const SparseMatrix& m) {
  Subspace s(m.rows());
  for (const auto& col : m.transpose().row_vectors()) s.insert(col);
  return s;
}

void assert_zero(const SparseMatrix& m, const char* what) {
  if (m.nonzeros() != 0) throw InternalError(std::string("chain property failed: ") + what);
}

HomologyReport middle_homology(const SparseMatrix& outgoing, const SparseMatrix& incoming, const char* what) {
  assert_zero(outgoing * incoming, what);
  auto cycles = rank_and_kernel(outgoing).kernel;
  Subspace boundaries = column_space(incoming);
  HomologyReport r;
  r.dimension = cycles.size() - boundaries.dim();
  r.representatives = representatives(cycles, std::move(boundaries));
  if (r.representatives.size() != r.dimension) throw InternalError(std::string("representative count mismatch in ") + what);
  return r;
}

HomologyReport cokernel(std::size_t ambient, const Subspace& relations) {
  HomologyReport r;
  r.dimension = ambient - relations.dim();
  for (auto i : relations.non_pivots()) r.representatives.push_back(to_dense(basis_vector(i), ambient));
  return r;
}

}  // namespace

SparseMatrix leibniz_bracket_matrix(const StructureAlgebra& a) {
  const std::size_t n = a.dim;
  SparseMatrix m(n, n * n);
  for (const auto& [ij, v] : a.bracket.entries())
    for (const auto& [k, c] : v) m.set(k, tensor2_index(n, ij.first, ij.second), c);
  return m;
}

SparseMatrix leibniz_boundary_matrix(const StructureAlgebra& a) {
  const std::size_t n = a.dim;
  SparseMatrix m(n * n, n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t col = tensor3_index(n, i, j, k);
        for (const auto& [p, c] : a.bracket.get(i, j)) m.add(tensor2_index(n, p, k), col, c);
        for (const auto& [p, c] : a.bracket.get(i, k)) m.add(tensor2_index(n, p, j), col, -c);
        for (const auto& [p, c] : a.bracket.get(j, k)) m.add(tensor2_index(n, i, p), col, -c);
      }
  return m;
}

SparseMatrix ce_d1_matrix(const StructureAlgebra& a) {
  const std::size_t n = a.dim;
  SparseMatrix m(n, n * n);
  for (std::size_t mi = 0; mi < n; ++mi)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& [p, c] : a.bracket.get(x, mi)) m.set(p, tensor2_index(n, mi, x), c);
  return m;
}

SparseMatrix ce_d2_matrix(const StructureAlgebra& a) {
  const std::size_t n = a.dim;
  const std::size_t wedges = n * (n - 1) / 2;
  SparseMatrix m(n * n, n * wedges);
  for (std::size_t mi = 0; mi < n; ++mi)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        const std::size_t col = mi * wedges + wedge2_index(n, x, y);
        for (const auto& [p, c] : a.bracket.get(x, mi)) m.add(tensor2_index(n, p, y), col, c);
        for (const auto& [p, c] : a.bracket.get(y, mi)) m.add(tensor2_index(n, p, x), col, -c);
        for (const auto& [p, c] : a.bracket.get(x, y)) m.add(tensor2_index(n, mi, p), col, c);
      }
  return m;
}

HomologyReport hl1(const StructureAlgebra& a) {
  require(a, Variety::Leibniz);
  Subspace derived(a.dim);
  for (const auto& [ij, v] : a.bracket.entries()) derived.insert(v);
  return cokernel(a.dim, derived);
}

HomologyReport hl2(const StructureAlgebra& a) {
  require(a, Variety::Leibniz);
  return middle_homology(leibniz_bracket_matrix(a), leibniz_boundary_matrix(a), "HL2");
}

HomologyReport hr0(const StructureAlgebra& a) {
  require(a, Variety::Lie);
  const std::size_t n = a.dim;
  const std::size_t ambient = n * (n + 1) / 2;
  auto sym = [&](std::size_t i, const SparseVector& v, const Rational& scale, SparseVector& out) {
    for (const auto& [p, c] : v) out.add(sym2_index(n, i, p), c * scale);
  };
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector r;
        sym(i, a.bracket.get(j, k), 1, r);   // x⊙[y,z]
        sym(k, a.bracket.get(i, j), -1, r);  // -[x,y]⊙z
        if (!r.empty()) rows.push_back(std::move(r));
      }
  Subspace relations(ambient);
  for (const auto& r : rows) relations.insert(r);
  HomologyReport report = cokernel(ambient, relations);
  if (report.dimension != quotient_dim(ambient, std::span<const SparseVector>(rows)))
    throw InternalError("HR0: elimination routes disagree");
  return report;
}

HomologyReport h1_adjoint(const StructureAlgebra& a) {
  require(a, Variety::Lie);
  return middle_homology(ce_d1_matrix(a), ce_d2_matrix(a), "H1(g, g^ad)");
}

}  // namespace ronco
