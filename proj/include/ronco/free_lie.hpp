#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ronco/lincomb.hpp"

namespace ronco {

inline constexpr int kDefaultMaxDegree = 8;

/// Degree cap shared by every operation that expands into the tensor algebra.
struct Limits {
  int max_degree = kDefaultMaxDegree;
};

/// Generator index, 1-based.
using Letter = int;

/// Nonempty sequence of generator indices. Indexes tensor monomials
/// v_{w1} ⊗ ... ⊗ v_{wn} and, when Lyndon, basis elements of the free Lie algebra.
using Word = std::vector<Letter>;

/// Length first, then lexicographic by generator index.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Element of the tensor algebra over V (also the free Leibniz algebra as a vector space).
using TensorElement = LinComb<Word, DegLex>;

/// Element of Lie(V) in the Lyndon basis: keys are Lyndon words ℓ standing for
/// their standard bracketing σ(ℓ).
using LyndonCoords = LinComb<Word, DegLex>;

std::string word_to_string(const Word& w, int gens);
/// Inverse of word_to_string. Throws InvalidArgument on bad letters.
Word parse_word(std::string_view s, int gens);

bool is_lyndon(const Word& w);

/// All Lyndon words of length exactly n over 1..d, lexicographic.
std::vector<Word> lyndon_words(int d, int n);

/// w = u·v with v the longest proper Lyndon suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

/// dim Lie_n(V) for dim V = d, by the necklace (Möbius) formula.
std::uint64_t witt_dim(int d, int n);

TensorElement tensor_product(const TensorElement& a, const TensorElement& b);
/// a⊗b - b⊗a.
TensorElement commutator(const TensorElement& a, const TensorElement& b);

/// Expansion of the standard bracketing σ(ℓ) of a Lyndon word.
TensorElement expand_lyndon(const Word& lyndon, const Limits& limits = {});
TensorElement expand_to_tensor(const LyndonCoords& x, const Limits& limits = {});

/// Inverse of expand_to_tensor on Lie elements, by triangular elimination of
/// Lyndon leading terms. Throws NotALieElement when a residue survives.
LyndonCoords rewrite_to_lyndon(const TensorElement& t, const Limits& limits = {});

LyndonCoords lie_bracket(const LyndonCoords& x, const LyndonCoords& y, const Limits& limits = {});

/// Left-normed bracketing w1…wn ↦ [[w1,w2],…,wn] computed inside the tensor algebra,
/// extended linearly.
TensorElement left_normed(const TensorElement& t);

/// {{w1,w2},…,wn} in Lyndon coordinates.
LyndonCoords left_normed_lyndon(const Word& w, const Limits& limits = {});

inline LyndonCoords lie_generator(Letter i) { return LyndonCoords(Word{i}); }

/// Tensor degree of an element; throws DegreeOverflow above the cap.
void check_degree(std::size_t degree, const Limits& limits);

}  // namespace ronco
