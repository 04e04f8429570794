#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ronco/errors.hpp"
#include "ronco/free_leibniz.hpp"

using namespace ronco;

namespace {
LeibElement L(const char* s) { return LeibElement(parse_word(s, 9)); }
}  // namespace

TEST_CASE("leib_bracket examples") {
  CHECK(leib_bracket(L("1"), L("2")) == L("12"));
  CHECK(leib_bracket(L("1"), L("23")) == L("123") - L("132"));
  CHECK(leib_bracket(L("1"), L("22")).empty());
  CHECK(leib_bracket(L("12"), L("3")) == L("123"));
  CHECK(leib_bracket(LeibElement{}, L("1")).empty());
}

TEST_CASE("leib_bracket respects the degree cap") {
  CHECK_THROWS_AS(leib_bracket(L("1111"), L("11111")), DegreeOverflow);
  CHECK_NOTHROW(leib_bracket(L("1111"), L("11111"), Limits{9}));
}

TEST_CASE("right operand acts by left-normed commutators") {
  // [ω, w] = ω ⊗ [[w1,w2],…,wn] computed in the tensor algebra
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Word omega = oracle::random_word(rng, 3, 1 + trial % 3);
    Word w = oracle::random_word(rng, 3, 1 + trial % 5);
    CHECK(leib_bracket(LeibElement(omega), LeibElement(w)) == tensor_product(LeibElement(omega), left_normed(LeibElement(w))));
  }
}

TEST_CASE("Leibniz identity and right annihilation on random elements") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = oracle::random_tensor(rng, 3, 2, 2);
    auto y = oracle::random_tensor(rng, 3, 2, 2);
    auto z = oracle::random_tensor(rng, 3, 2, 2);
    CHECK(leib_bracket(x, leib_bracket(y, z)) == leib_bracket(leib_bracket(x, y), z) - leib_bracket(leib_bracket(x, z), y));
    CHECK(leib_bracket(x, leib_bracket(y, y)).empty());
    CHECK(leib_bracket(x, leib_bracket(y, z) + leib_bracket(z, y)).empty());
  }
}

TEST_CASE("left-normed products of generators span V^{⊗n}") {
  // The word w1…wn is itself the left-normed product, so every word is reached.
  for (const auto& w : oracle::all_words(2, 4)) {
    LeibElement acc(Word{w[0]});
    for (std::size_t i = 1; i < w.size(); ++i) acc = leib_bracket(acc, LeibElement(Word{w[i]}));
    CHECK(acc == LeibElement(w));
  }
}

TEST_CASE("eval_term") {
  CHECK(eval_term(parse_term("[g1,g2]"), 2) == L("12"));
  CHECK(eval_term(parse_term("[[g1,g1],g2]"), 2) == L("112"));
  CHECK(eval_term(parse_term("[g1,g2] - [g1,g2]"), 2).empty());
  CHECK(eval_term(parse_term("1/2 * [g1,[g2,g3]]"), 3) == Rational(1, 2) * (L("123") - L("132")));
  CHECK_THROWS_AS(eval_term(parse_term("[g1,g3]"), 2), NameError);
}
