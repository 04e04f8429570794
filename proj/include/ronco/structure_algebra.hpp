#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ronco/errors.hpp"
#include "ronco/linalg.hpp"

namespace ronco {

/// Sparse bilinear operation on a basis e_0..e_{dim-1}:
/// op(e_i, e_j) = Σ_k c_ij^k e_k. Indices are 0-based in code, 1-based on disk.
class BilinearTable {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  BilinearTable() = default;
  explicit BilinearTable(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  void set(std::size_t i, std::size_t j, SparseVector v);
  const SparseVector& get(std::size_t i, std::size_t j) const;
  SparseVector apply(const SparseVector& x, const SparseVector& y) const;
  const std::map<Key, SparseVector>& entries() const { return entries_; }

  friend bool operator==(const BilinearTable&, const BilinearTable&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<Key, SparseVector> entries_;
};

/// Finite-dimensional algebra with one bracket, given by structure constants.
struct StructureAlgebra {
  std::size_t dim = 0;
  BilinearTable bracket;

  StructureAlgebra() = default;
  explicit StructureAlgebra(std::size_t n) : dim(n), bracket(n) {}

  friend bool operator==(const StructureAlgebra&, const StructureAlgebra&) = default;
};

/// Vector space with a bracket {-,-} and a product xy, not validated on construction.
struct MuAlgebra {
  std::size_t dim = 0;
  BilinearTable lie_bracket;
  BilinearTable product;

  MuAlgebra() = default;
  explicit MuAlgebra(std::size_t n) : dim(n), lie_bracket(n), product(n) {}

  friend bool operator==(const MuAlgebra&, const MuAlgebra&) = default;
};

enum class Variety { Leibniz, Lie, Ronco, SymmetricLeibniz };

std::string to_string(Variety v);
Variety parse_variety(const std::string& name);

struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;  // 1-based basis indices
  Vector residual;
};

struct VerificationReport {
  std::string variety;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Precondition failure that carries the diagnosing report.
struct VerificationFailure : PreconditionError {
  VerificationFailure(const std::string& what, VerificationReport r)
      : PreconditionError(what), report(std::move(r)) {}
  VerificationReport report;
};

SparseVector basis_vector(std::size_t i);

Vector bracket_eval(const StructureAlgebra& a, std::span<const Rational> x, std::span<const Rational> y);
SparseVector bracket(const StructureAlgebra& a, const SparseVector& x, const SparseVector& y);

/// Exhaustive check on basis tuples. Identities that are not multilinear are
/// checked on diagonal basis instances together with their polarized forms.
VerificationReport verify_variety(const StructureAlgebra& a, Variety v);

/// Checks the μ-algebra axioms i)-v), the derived skew-symmetry of x{y,z},
/// and x{y,z} = 0 when `symmetric` is set.
VerificationReport verify_mu(const MuAlgebra& m, bool symmetric = false);

/// {x,y} = ([x,y] - [y,x])/2, xy = ([x,y] + [y,x])/2. Throws VerificationFailure
/// if the input is not a Ronco algebra.
MuAlgebra ronco_to_mu(const StructureAlgebra& a);

/// [x,y] = {x,y} + xy. Throws VerificationFailure if the input is not a μ-algebra.
StructureAlgebra mu_to_ronco(const MuAlgebra& m);

/// Basis (reduced echelon) of span{[e_i,e_j] + [e_j,e_i]}, which is the span of all squares.
std::vector<Vector> ann_subspace(const StructureAlgebra& a);

/// Two-sided ideal generated by the squares.
Subspace square_ideal(const StructureAlgebra& a);

struct LieQuotient {
  StructureAlgebra algebra;
  Subspace ideal;
  std::vector<std::size_t> complement;  // original basis indices kept in the quotient
};

/// g_Lie = g / (ideal generated by squares), on the complement of the pivot
/// coordinates. Throws VerificationFailure on non-Leibniz input.
LieQuotient lie_quotient_data(const StructureAlgebra& a);
StructureAlgebra lie_quotient(const StructureAlgebra& a);

/// V ⊕ Λ²(V) with [u,v] = u∧v; wedge basis e_{i∧j}, i < j, after the generators.
StructureAlgebra free_nil2(int d);

StructureAlgebra abelian_algebra(std::size_t dim);
/// [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2, antisymmetric.
StructureAlgebra cross_product_algebra();
StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b);

}  // namespace ronco
