#include "ronco/free_lie.hpp"

#include <algorithm>

#include "ronco/errors.hpp"

namespace ronco {

void check_degree(std::size_t degree, const Limits& limits) {
  if (degree > static_cast<std::size_t>(limits.max_degree))
    throw DegreeOverflow("degree " + std::to_string(degree) + " exceeds the cap " +
                         std::to_string(limits.max_degree));
}

std::string word_to_string(const Word& w, int gens) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (gens > 9 && i > 0) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view s, int gens) {
  Word w;
  auto letter = [&](std::string_view tok) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidArgument("malformed word '" + std::string(s) + "'");
    int v = std::stoi(std::string(tok));
    if (v < 1 || v > gens) throw InvalidArgument("letter " + std::to_string(v) + " outside 1.." + std::to_string(gens));
    w.push_back(v);
  };
  if (gens > 9) {
    std::size_t start = 0;
    while (true) {
      auto dot = s.find('.', start);
      letter(s.substr(start, dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) letter(s.substr(i, 1));
  }
  if (w.empty()) throw InvalidArgument("empty word");
  return w;
}

bool is_lyndon(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return false;
  for (std::size_t k = 1; k < n; ++k) {
    // rotation starting at k must be strictly larger
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = w[i], b = w[(k + i) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: periodic word
    }
  }
  return true;
}

std::vector<Word> lyndon_words(int d, int n) {
  if (d < 1 || n < 1) throw InvalidArgument("lyndon_words needs d >= 1 and n >= 1");
  // Duval's generation of all Lyndon words of length <= n in lexicographic order.
  std::vector<Word> out;
  Word w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == n) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == d) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w))
    throw InvalidArgument("standard factorization needs a Lyndon word of length >= 2");
  for (std::size_t split = 1; split < w.size(); ++split) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split)), v};
  }
  throw InternalError("Lyndon word without a Lyndon suffix");
}

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

using ExpansionCache = std::map<Word, TensorElement>;

const TensorElement& expand_cached(const Word& l, ExpansionCache& cache) {
  if (auto it = cache.find(l); it != cache.end()) return it->second;
  TensorElement e;
  if (l.size() == 1) {
    e.add(l, 1);
  } else {
    auto [u, v] = standard_factorization(l);
    TensorElement eu = expand_cached(u, cache);
    TensorElement ev = expand_cached(v, cache);
    e = commutator(eu, ev);
  }
  return cache.emplace(l, std::move(e)).first->second;
}

std::size_t max_degree_of(const TensorElement& t) {
  std::size_t deg = 0;
  for (const auto& [w, c] : t) deg = std::max(deg, w.size());
  return deg;
}

}  // namespace

std::uint64_t witt_dim(int d, int n) {
  if (d < 1 || n < 1) throw InvalidArgument("witt_dim needs d >= 1 and n >= 1");
  Integer sum = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    sum += mobius(n / k) * pw;
  }
  sum /= n;
  return sum.get_ui();
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
  TensorElement out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      out.add(w, cu * cv);
    }
  return out;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) {
  return tensor_product(a, b) - tensor_product(b, a);
}

TensorElement expand_lyndon(const Word& lyndon, const Limits& limits) {
  check_degree(lyndon.size(), limits);
  if (!is_lyndon(lyndon)) throw InvalidArgument("expand_lyndon needs a Lyndon word");
  ExpansionCache cache;
  return expand_cached(lyndon, cache);
}

TensorElement expand_to_tensor(const LyndonCoords& x, const Limits& limits) {
  check_degree(max_degree_of(x), limits);
  ExpansionCache cache;
  TensorElement out;
  for (const auto& [l, c] : x) {
    if (!is_lyndon(l)) throw InvalidArgument("LyndonCoords key is not a Lyndon word");
    out.add(expand_cached(l, cache), c);
  }
  return out;
}

LyndonCoords rewrite_to_lyndon(const TensorElement& t, const Limits& limits) {
  check_degree(max_degree_of(t), limits);
  ExpansionCache cache;
  LyndonCoords out;
  TensorElement rest = t;
  // The least word of a Lie element is the least Lyndon word in its support,
  // and σ(ℓ) expands to ℓ plus lexicographically larger words.
  while (!rest.empty()) {
    const auto [w, c] = *rest.begin();
    if (!is_lyndon(w))
      throw NotALieElement("not a Lie element: residual leading word " + word_to_string(w, 10) +
                           " is not Lyndon");
    out.add(w, c);
    rest.add(expand_cached(w, cache), -c);
  }
  return out;
}

LyndonCoords lie_bracket(const LyndonCoords& x, const LyndonCoords& y, const Limits& limits) {
  if (x.empty() || y.empty()) return {};
  check_degree(max_degree_of(x) + max_degree_of(y), limits);
  return rewrite_to_lyndon(commutator(expand_to_tensor(x, limits), expand_to_tensor(y, limits)), limits);
}

TensorElement left_normed(const TensorElement& t) {
  TensorElement out;
  for (const auto& [w, c] : t) {
    TensorElement acc(Word{w.front()});
    for (std::size_t i = 1; i < w.size(); ++i) acc = commutator(acc, TensorElement(Word{w[i]}));
    out.add(acc, c);
  }
  return out;
}

LyndonCoords left_normed_lyndon(const Word& w, const Limits& limits) {
  if (w.empty()) throw InvalidArgument("empty word");
  check_degree(w.size(), limits);
  return rewrite_to_lyndon(left_normed(TensorElement(w)), limits);
}

}  // namespace ronco
