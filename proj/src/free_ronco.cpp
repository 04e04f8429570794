#include "ronco/free_ronco.hpp"

#include <map>

#include "ronco/errors.hpp"

namespace ronco {

RoncoElement project(const LeibElement& x, const Limits& limits) {
  std::map<Word, LyndonCoords> prefix_cache;
  RoncoElement out;
  for (const auto& [w, c] : x) {
    check_degree(w.size(), limits);
    if (w.size() == 1) {
      out.add(RoncoKey{{}, w.front()}, c);
      continue;
    }
    Word head(w.begin(), w.end() - 1);
    auto it = prefix_cache.find(head);
    if (it == prefix_cache.end()) it = prefix_cache.emplace(head, left_normed_lyndon(head, limits)).first;
    for (const auto& [l, cl] : it->second) out.add(RoncoKey{l, w.back()}, c * cl);
  }
  return out;
}

LeibElement section(const RoncoElement& x, const Limits& limits) {
  LeibElement out;
  for (const auto& [key, c] : x) {
    check_degree(key.degree(), limits);
    if (key.lie.empty()) {
      out.add(Word{key.gen}, c);
      continue;
    }
    const Rational scale = c / static_cast<long>(key.lie.size());
    for (const auto& [w, cw] : expand_lyndon(key.lie, limits)) {
      Word u = w;
      u.push_back(key.gen);
      out.add(u, cw * scale);
    }
  }
  return out;
}

RoncoElement ronco_bracket(const RoncoElement& x, const RoncoElement& y, const Limits& limits) {
  return project(leib_bracket(section(x, limits), section(y, limits), limits), limits);
}

RoncoElement eval_ronco_term(const Term& t, int gens, const Limits& limits) {
  return evaluate<RoncoElement>(
      t,
      [gens](Letter i) {
        if (i < 1 || i > gens)
          throw NameError("unknown generator g" + std::to_string(i) + " (have g1..g" + std::to_string(gens) + ")");
        return ronco_generator(i);
      },
      [&limits](const RoncoElement& a, const RoncoElement& b) { return ronco_bracket(a, b, limits); });
}

std::uint64_t graded_dim(int d, int n) {
  if (d < 1 || n < 1) throw InvalidArgument("graded_dim needs d >= 1 and n >= 1");
  return n == 1 ? static_cast<std::uint64_t>(d) : witt_dim(d, n - 1) * static_cast<std::uint64_t>(d);
}

std::vector<RoncoKey> graded_basis(int d, int n) {
  if (d < 1 || n < 1) throw InvalidArgument("graded_basis needs d >= 1 and n >= 1");
  std::vector<RoncoKey> out;
  if (n == 1) {
    for (Letter v = 1; v <= d; ++v) out.push_back({{}, v});
    return out;
  }
  for (const auto& l : lyndon_words(d, n - 1))
    for (Letter v = 1; v <= d; ++v) out.push_back({l, v});
  return out;
}

std::vector<RoncoElement> graded_kernel_basis(int d, int n, const Limits& limits) {
  if (d < 1 || n < 2) throw InvalidArgument("graded_kernel_basis needs d >= 1 and n >= 2");
  check_degree(static_cast<std::size_t>(n), limits);
  const auto cols = graded_basis(d, n);
  const auto rows = lyndon_words(d, n);
  std::map<Word, std::size_t> row_index;
  for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);

  SparseMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [l, x] : lie_bracket(LyndonCoords(cols[c].lie), lie_generator(cols[c].gen), limits))
      m.set(row_index.at(l), c, x);

  std::vector<RoncoElement> out;
  for (const auto& v : rank_and_kernel(m).kernel) {
    RoncoElement e;
    for (std::size_t c = 0; c < v.size(); ++c) e.add(cols[c], v[c]);
    out.push_back(std::move(e));
  }
  return out;
}

StructureAlgebra truncate_to_structure(int d, int max_degree, const Limits& limits) {
  if (d < 1 || max_degree < 1) throw InvalidArgument("truncate_to_structure needs d >= 1 and N >= 1");
  check_degree(static_cast<std::size_t>(max_degree), limits);
  std::vector<RoncoKey> basis;
  for (int n = 1; n <= max_degree; ++n) {
    auto g = graded_basis(d, n);
    basis.insert(basis.end(), g.begin(), g.end());
  }
  std::map<RoncoKey, std::size_t, RoncoOrder> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  StructureAlgebra a(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].degree() + basis[j].degree() > static_cast<std::size_t>(max_degree)) continue;
      SparseVector v;
      for (const auto& [k, c] : ronco_bracket(RoncoElement(basis[i]), RoncoElement(basis[j]), limits))
        v.add(index.at(k), c);
      a.bracket.set(i, j, std::move(v));
    }
  return a;
}

}  // namespace ronco
