#pragma once

// Test-only reference implementations, deliberately naive and independent of
// the library's elimination and rewriting code paths.

#include <algorithm>
#include <random>
#include <vector>

#include "ronco/free_lie.hpp"
#include "ronco/free_ronco.hpp"
#include "ronco/linalg.hpp"

namespace ronco::oracle {

/// Dense Gauss-Jordan with rational pivots.
inline std::size_t dense_rank(std::vector<Vector> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// All words of length n over 1..d in lexicographic order.
inline std::vector<Word> all_words(int d, int n) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == d) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

/// Lyndon words by the rotation definition.
inline std::vector<Word> brute_lyndon(int d, int n) {
  std::vector<Word> out;
  for (const auto& w : all_words(d, n)) {
    bool ok = true;
    for (std::size_t k = 1; k < w.size() && ok; ++k) {
      Word rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
      ok = w < rot;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

inline Rational random_rational(std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Word random_word(std::mt19937& rng, int d, int n) {
  std::uniform_int_distribution<int> letter(1, d);
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(letter(rng));
  return w;
}

/// Random element of the tensor algebra with `terms` words of degree in [1, max_deg].
inline TensorElement random_tensor(std::mt19937& rng, int d, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  TensorElement t;
  for (int i = 0; i < terms; ++i) t.add(random_word(rng, d, deg(rng)), random_rational(rng, 5));
  return t;
}

inline LyndonCoords random_lyndon(std::mt19937& rng, int d, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  LyndonCoords x;
  for (int i = 0; i < terms; ++i) {
    auto basis = lyndon_words(d, deg(rng));
    if (basis.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    x.add(basis[pick(rng)], random_rational(rng, 5));
  }
  return x;
}

inline RoncoElement random_ronco(std::mt19937& rng, int d, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  RoncoElement x;
  for (int i = 0; i < terms; ++i) {
    auto basis = graded_basis(d, deg(rng));
    if (basis.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    x.add(basis[pick(rng)], random_rational(rng, 5));
  }
  return x;
}

inline std::size_t max_degree(const RoncoElement& x) {
  std::size_t m = 0;
  for (const auto& [k, c] : x) m = std::max(m, k.degree());
  return m;
}

inline std::size_t max_degree(const TensorElement& x) {
  std::size_t m = 0;
  for (const auto& [w, c] : x) m = std::max(m, w.size());
  return m;
}

}  // namespace ronco::oracle
