#pragma once

#include "ronco/free_lie.hpp"
#include "ronco/term.hpp"

namespace ronco {

/// Element of Leib(V) = ⊕ V^{⊗n}; the word w1…wn is the left-normed product
/// [[w1,w2],…,wn].
using LeibElement = TensorElement;

/// Bracket of the free Leibniz algebra: [ω, v] = ω·v for a letter v, and for a
/// longer right operand w = w'·v, [ω, w] = [[ω, w'], v] - [[ω, v], w'].
LeibElement leib_bracket(const LeibElement& x, const LeibElement& y, const Limits& limits = {});

/// Evaluates a bracket term in Leib(V) with dim V = gens. Throws NameError for
/// generators outside 1..gens.
LeibElement eval_term(const Term& t, int gens, const Limits& limits = {});

}  // namespace ronco
