#pragma once

#include <cstdint>
#include <vector>

#include "ronco/free_leibniz.hpp"
#include "ronco/free_lie.hpp"
#include "ronco/structure_algebra.hpp"

namespace ronco {

/// Basis key of 𝒱(V) = V ⊕ ⊕_{n≥2} Lie_{n-1}(V)⊗V. An empty `lie` word means
/// the generator g_gen in degree 1; otherwise the key is σ(lie)⊗g_gen of degree
/// |lie| + 1.
struct RoncoKey {
  Word lie;
  Letter gen = 0;

  std::size_t degree() const { return lie.size() + 1; }
  friend bool operator==(const RoncoKey&, const RoncoKey&) = default;
};

/// Degree, then Lyndon word, then generator.
struct RoncoOrder {
  bool operator()(const RoncoKey& a, const RoncoKey& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.lie != b.lie) return a.lie < b.lie;
    return a.gen < b.gen;
  }
};

using RoncoElement = LinComb<RoncoKey, RoncoOrder>;

inline RoncoElement ronco_generator(Letter i) { return RoncoElement(RoncoKey{{}, i}); }

/// v1⊗…⊗vn ↦ {{v1,v2},…,v_{n-1}}⊗vn, written in Lyndon coordinates.
RoncoElement project(const LeibElement& x, const Limits& limits = {});

/// Linear section of `project`: σ(ℓ)⊗v ↦ (1/|ℓ|)·expand(σ(ℓ))⊗v.
LeibElement section(const RoncoElement& x, const Limits& limits = {});

/// [x, y] = project([section x, section y]) in Leib(V).
RoncoElement ronco_bracket(const RoncoElement& x, const RoncoElement& y, const Limits& limits = {});

/// Evaluates a bracket term in 𝒱(V) using ronco_bracket.
RoncoElement eval_ronco_term(const Term& t, int gens, const Limits& limits = {});

std::uint64_t graded_dim(int d, int n);

/// Basis keys of degree n in canonical order.
std::vector<RoncoKey> graded_basis(int d, int n);

/// Basis of Ker(Lie_{n-1}(V)⊗V → Lie_n(V)), (ℓ, v) ↦ {σ(ℓ), g_v}.
std::vector<RoncoElement> graded_kernel_basis(int d, int n, const Limits& limits = {});

/// Quotient of 𝒱(V) by degrees > max_degree as a structure-constant algebra;
/// basis order is graded_basis(d, 1), graded_basis(d, 2), ...
StructureAlgebra truncate_to_structure(int d, int max_degree, const Limits& limits = {});

}  // namespace ronco
