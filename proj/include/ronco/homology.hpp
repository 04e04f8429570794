#pragma once

#include <cstddef>
#include <vector>

#include "ronco/linalg.hpp"
#include "ronco/structure_algebra.hpp"

namespace ronco {

/// Dimension of a homology space plus cycles representing a basis of it.
struct HomologyReport {
  std::size_t dimension = 0;
  std::vector<Vector> representatives;
};

/// Index of e_i⊗e_j in 𝔤⊗𝔤 and of e_i⊗e_j⊗e_k in 𝔤⊗𝔤⊗𝔤 (lexicographic).
inline std::size_t tensor2_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }
inline std::size_t tensor3_index(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return (i * n + j) * n + k;
}
/// Index of e_i⊙e_j (i <= j) in Sym²𝔤, pairs ordered lexicographically.
std::size_t sym2_index(std::size_t n, std::size_t i, std::size_t j);
/// Index of e_i∧e_j (i < j) in Λ²𝔤, pairs ordered lexicographically.
std::size_t wedge2_index(std::size_t n, std::size_t i, std::size_t j);

/// [-,-] : 𝔤⊗𝔤 → 𝔤.
SparseMatrix leibniz_bracket_matrix(const StructureAlgebra& a);
/// d(x⊗y⊗z) = [x,y]⊗z - [x,z]⊗y - x⊗[y,z] : 𝔤⊗𝔤⊗𝔤 → 𝔤⊗𝔤.
SparseMatrix leibniz_boundary_matrix(const StructureAlgebra& a);

/// Chevalley–Eilenberg differentials with M = 𝔤, x·m = [x,m]:
/// d1(m⊗x) = x·m,  d2(m⊗x∧y) = (x·m)⊗y - (y·m)⊗x + m⊗[x,y].
SparseMatrix ce_d1_matrix(const StructureAlgebra& a);
SparseMatrix ce_d2_matrix(const StructureAlgebra& a);

/// 𝔤 / [𝔤,𝔤]; representatives are basis vectors of a complement.
HomologyReport hl1(const StructureAlgebra& a);
/// Ker([-,-]) / Im(d) on 𝔤⊗𝔤.
HomologyReport hl2(const StructureAlgebra& a);
/// Sym²𝔤 modulo x⊙[y,z] = [x,y]⊙z. Lie input only.
HomologyReport hr0(const StructureAlgebra& a);
/// H_1(𝔤, 𝔤^ad). Lie input only.
HomologyReport h1_adjoint(const StructureAlgebra& a);

}  // namespace ronco
