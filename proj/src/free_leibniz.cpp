#include "ronco/free_leibniz.hpp"

#include <algorithm>

#include "ronco/errors.hpp"

namespace ronco {

namespace {

LeibElement append_letter(const LeibElement& x, Letter v) {
  LeibElement out;
  for (const auto& [w, c] : x) {
    Word u = w;
    u.push_back(v);
    out.add(u, c);
  }
  return out;
}

// [ω, w] on basis words.
LeibElement bracket_words(const Word& omega, const Word& w) {
  if (w.size() == 1) {
    Word u = omega;
    u.push_back(w.front());
    return LeibElement(u);
  }
  const Letter v = w.back();
  const Word head(w.begin(), w.end() - 1);
  LeibElement out = append_letter(bracket_words(omega, head), v);
  Word omega_v = omega;
  omega_v.push_back(v);
  out -= bracket_words(omega_v, head);
  return out;
}

}  // namespace

LeibElement leib_bracket(const LeibElement& x, const LeibElement& y, const Limits& limits) {
  LeibElement out;
  for (const auto& [u, cu] : x)
    for (const auto& [w, cw] : y) {
      check_degree(u.size() + w.size(), limits);
      out.add(bracket_words(u, w), cu * cw);
    }
  return out;
}

LeibElement eval_term(const Term& t, int gens, const Limits& limits) {
  return evaluate<LeibElement>(
      t,
      [gens](Letter i) {
        if (i < 1 || i > gens)
          throw NameError("unknown generator g" + std::to_string(i) + " (have g1..g" + std::to_string(gens) + ")");
        return LeibElement(Word{i});
      },
      [&limits](const LeibElement& a, const LeibElement& b) { return leib_bracket(a, b, limits); });
}

}  // namespace ronco
