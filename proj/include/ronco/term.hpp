#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ronco/errors.hpp"
#include "ronco/free_lie.hpp"
#include "ronco/rational.hpp"

namespace ronco {

/// Bracket-term syntax tree.
///   term   := atom | term "+" atom | term "-" atom
///   atom   := factor | rational "*" atom
///   factor := gen | "[" term "," term "]" | "(" term ")"
///   gen    := "g" digits
struct Term {
  enum class Kind { Generator, Bracket, Scale, Sum, Diff };

  Kind kind = Kind::Generator;
  Letter generator = 0;     // Generator
  Rational scalar;          // Scale
  std::vector<Term> children;

  static Term gen(Letter i);
  static Term bracket(Term a, Term b);
  static Term scale(Rational s, Term a);
  static Term sum(std::vector<Term> terms);
  static Term diff(Term a, Term b);

  /// Largest generator index referenced.
  Letter max_generator() const;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Throws SyntaxError (with a 1-based position) on malformed input.
Term parse_term(std::string_view input);

/// Prints in the grammar above; parse_term(to_string(t)) == t.
std::string to_string(const Term& t);

/// Homomorphic evaluation: generators through `gen`, brackets through `bracket`,
/// linear nodes through the value type's vector-space operations.
template <class Value, class GenFn, class BracketFn>
Value evaluate(const Term& t, GenFn&& gen, BracketFn&& bracket) {
  switch (t.kind) {
    case Term::Kind::Generator:
      return gen(t.generator);
    case Term::Kind::Bracket:
      return bracket(evaluate<Value>(t.children[0], gen, bracket), evaluate<Value>(t.children[1], gen, bracket));
    case Term::Kind::Scale:
      return t.scalar * evaluate<Value>(t.children[0], gen, bracket);
    case Term::Kind::Sum: {
      Value acc;
      for (const auto& c : t.children) acc += evaluate<Value>(c, gen, bracket);
      return acc;
    }
    case Term::Kind::Diff:
      return evaluate<Value>(t.children[0], gen, bracket) - evaluate<Value>(t.children[1], gen, bracket);
  }
  throw InternalError("unknown term kind");
}

}  // namespace ronco
