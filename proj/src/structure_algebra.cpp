#include "ronco/structure_algebra.hpp"

#include <string>

namespace ronco {

void BilinearTable::set(std::size_t i, std::size_t j, SparseVector v) {
  if (i >= dim_ || j >= dim_) throw DimensionMismatch("structure constant index out of range");
  for (const auto& [k, c] : v)
    if (k >= dim_) throw DimensionMismatch("structure constant target index out of range");
  if (v.empty())
    entries_.erase({i, j});
  else
    entries_[{i, j}] = std::move(v);
}

const SparseVector& BilinearTable::get(std::size_t i, std::size_t j) const {
  static const SparseVector zero;
  auto it = entries_.find({i, j});
  return it == entries_.end() ? zero : it->second;
}

SparseVector BilinearTable::apply(const SparseVector& x, const SparseVector& y) const {
  SparseVector out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      auto it = entries_.find({i, j});
      if (it != entries_.end()) out.add(it->second, a * b);
    }
  return out;
}

std::string to_string(Variety v) {
  switch (v) {
    case Variety::Leibniz: return "leibniz";
    case Variety::Lie: return "lie";
    case Variety::Ronco: return "ronco";
    case Variety::SymmetricLeibniz: return "symmetric";
  }
  return {};
}

Variety parse_variety(const std::string& name) {
  if (name == "leibniz") return Variety::Leibniz;
  if (name == "lie") return Variety::Lie;
  if (name == "ronco") return Variety::Ronco;
  if (name == "symmetric" || name == "symmetric-leibniz") return Variety::SymmetricLeibniz;
  throw InvalidArgument("unknown variety '" + name + "'");
}

SparseVector basis_vector(std::size_t i) { return SparseVector(i); }

SparseVector bracket(const StructureAlgebra& a, const SparseVector& x, const SparseVector& y) {
  return a.bracket.apply(x, y);
}

Vector bracket_eval(const StructureAlgebra& a, std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != a.dim || y.size() != a.dim)
    throw DimensionMismatch("bracket_eval: vectors must have length " + std::to_string(a.dim));
  return to_dense(a.bracket.apply(to_sparse(x), to_sparse(y)), a.dim);
}

namespace {

class Checker {
 public:
  Checker(std::string variety, std::size_t dim) : dim_(dim) { report_.variety = std::move(variety); }

  void expect_zero(const std::string& axiom, std::vector<std::size_t> idx, const SparseVector& residual) {
    if (residual.empty()) return;
    for (auto& i : idx) ++i;
    report_.violations.push_back({axiom, std::move(idx), to_dense(residual, dim_)});
  }

  VerificationReport take() { return std::move(report_); }

 private:
  std::size_t dim_;
  VerificationReport report_;
};

void check_leibniz(const BilinearTable& br, Checker& ck) {
  const std::size_t n = br.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // [x,[y,z]] - [[x,y],z] + [[x,z],y]
        SparseVector r = br.apply(basis_vector(i), br.get(j, k));
        r -= br.apply(br.get(i, j), basis_vector(k));
        r += br.apply(br.get(i, k), basis_vector(j));
        ck.expect_zero("leibniz", {i, j, k}, r);
      }
}

void check_antisymmetric(const BilinearTable& t, const std::string& name, Checker& ck) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i) {
    ck.expect_zero(name + "-square", {i}, t.get(i, i));
    for (std::size_t j = i + 1; j < n; ++j) ck.expect_zero(name + "-polarized", {i, j}, t.get(i, j) + t.get(j, i));
  }
}

}  // namespace

VerificationReport verify_variety(const StructureAlgebra& a, Variety v) {
  Checker ck(to_string(v), a.dim);
  const auto& br = a.bracket;
  check_leibniz(br, ck);
  const std::size_t n = a.dim;

  switch (v) {
    case Variety::Leibniz:
      break;
    case Variety::Lie:
      check_antisymmetric(br, "lie", ck);
      break;
    case Variety::Ronco:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          ck.expect_zero("ronco-square", {i, j}, br.apply(br.get(i, i), basis_vector(j)));
          for (std::size_t k = 0; k < n; ++k)
            ck.expect_zero("ronco-polarized", {i, j, k},
                           br.apply(br.get(i, j) + br.get(j, i), basis_vector(k)));
        }
      break;
    case Variety::SymmetricLeibniz:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            // [[x,y],z] - [x,[y,z]] + [y,[x,z]]
            SparseVector r = br.apply(br.get(i, j), basis_vector(k));
            r -= br.apply(basis_vector(i), br.get(j, k));
            r += br.apply(basis_vector(j), br.get(i, k));
            ck.expect_zero("right-leibniz", {i, j, k}, r);
          }
      break;
  }
  return ck.take();
}

VerificationReport verify_mu(const MuAlgebra& m, bool symmetric) {
  Checker ck(symmetric ? "mu-symmetric" : "mu", m.dim);
  const auto& lie = m.lie_bracket;
  const auto& mul = m.product;
  const std::size_t n = m.dim;
  if (lie.dim() != n || mul.dim() != n) throw DimensionMismatch("mu-algebra tables disagree on dimension");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) ck.expect_zero("mu-i-commutative", {i, j}, mul.get(i, j) - mul.get(j, i));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        ck.expect_zero("mu-ii-right", {i, j, k}, mul.apply(ei, mul.get(j, k)));
        ck.expect_zero("mu-ii-left", {i, j, k}, mul.apply(mul.get(i, j), ek));
      }

  check_antisymmetric(lie, "mu-iii", ck);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const auto ei = basis_vector(i), ej = basis_vector(j), ek = basis_vector(k);
        ck.expect_zero("mu-iv", {i, j, k}, lie.apply(mul.get(i, j), ek));

        // {x,{y,z}} + {z,{x,y}} + {y,{z,x}} - x{y,z}
        SparseVector r = lie.apply(ei, lie.get(j, k));
        r += lie.apply(ek, lie.get(i, j));
        r += lie.apply(ej, lie.get(k, i));
        r -= mul.apply(ei, lie.get(j, k));
        ck.expect_zero("mu-v", {i, j, k}, r);

        // x{y,z} is skew-symmetric in (x, y, z)
        const SparseVector xyz = mul.apply(ei, lie.get(j, k));
        ck.expect_zero("mu-skew-xy", {i, j, k}, xyz + mul.apply(ej, lie.get(i, k)));
        ck.expect_zero("mu-skew-yz", {i, j, k}, xyz + mul.apply(ei, lie.get(k, j)));
        if (symmetric) ck.expect_zero("mu-symmetric", {i, j, k}, xyz);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      ck.expect_zero("mu-skew-diagonal", {i, j}, mul.apply(basis_vector(i), lie.get(i, j)));
  return ck.take();
}

MuAlgebra ronco_to_mu(const StructureAlgebra& a) {
  auto report = verify_variety(a, Variety::Ronco);
  if (!report.ok()) throw VerificationFailure("not a Ronco algebra", std::move(report));
  const Rational half(1, 2);
  MuAlgebra m(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const auto& xy = a.bracket.get(i, j);
      const auto& yx = a.bracket.get(j, i);
      m.lie_bracket.set(i, j, half * (xy - yx));
      m.product.set(i, j, half * (xy + yx));
    }
  return m;
}

StructureAlgebra mu_to_ronco(const MuAlgebra& m) {
  auto report = verify_mu(m, false);
  if (!report.ok()) throw VerificationFailure("not a mu-algebra", std::move(report));
  StructureAlgebra a(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) a.bracket.set(i, j, m.lie_bracket.get(i, j) + m.product.get(i, j));
  return a;
}

namespace {

Subspace symmetrized_image(const StructureAlgebra& a) {
  Subspace s(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) s.insert(a.bracket.get(i, j) + a.bracket.get(j, i));
  return s;
}

}  // namespace

std::vector<Vector> ann_subspace(const StructureAlgebra& a) {
  std::vector<Vector> out;
  for (const auto& v : symmetrized_image(a).basis()) out.push_back(to_dense(v, a.dim));
  return out;
}

Subspace square_ideal(const StructureAlgebra& a) {
  Subspace ideal = symmetrized_image(a);
  std::vector<SparseVector> frontier = ideal.basis();
  while (!frontier.empty()) {
    std::vector<SparseVector> next;
    for (const auto& v : frontier)
      for (std::size_t k = 0; k < a.dim; ++k) {
        for (auto w : {a.bracket.apply(v, basis_vector(k)), a.bracket.apply(basis_vector(k), v)})
          if (ideal.insert(w)) next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return ideal;
}

LieQuotient lie_quotient_data(const StructureAlgebra& a) {
  auto report = verify_variety(a, Variety::Leibniz);
  if (!report.ok()) throw VerificationFailure("not a Leibniz algebra", std::move(report));
  LieQuotient q{StructureAlgebra{}, square_ideal(a), {}};
  q.complement = q.ideal.non_pivots();
  std::vector<std::size_t> position(a.dim, a.dim);
  for (std::size_t p = 0; p < q.complement.size(); ++p) position[q.complement[p]] = p;

  q.algebra = StructureAlgebra(q.complement.size());
  for (std::size_t p = 0; p < q.complement.size(); ++p)
    for (std::size_t r = 0; r < q.complement.size(); ++r) {
      SparseVector image;
      for (const auto& [k, c] : q.ideal.reduce(a.bracket.get(q.complement[p], q.complement[r])))
        image.add(position[k], c);
      q.algebra.bracket.set(p, r, std::move(image));
    }
  return q;
}

StructureAlgebra lie_quotient(const StructureAlgebra& a) { return lie_quotient_data(a).algebra; }

StructureAlgebra free_nil2(int d) {
  if (d < 1) throw InvalidArgument("free_nil2 needs d >= 1");
  const auto n = static_cast<std::size_t>(d);
  StructureAlgebra a(n + n * (n - 1) / 2);
  std::size_t wedge = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++wedge) {
      a.bracket.set(i, j, SparseVector(wedge, 1));
      a.bracket.set(j, i, SparseVector(wedge, -1));
    }
  return a;
}

StructureAlgebra abelian_algebra(std::size_t dim) { return StructureAlgebra(dim); }

StructureAlgebra cross_product_algebra() {
  StructureAlgebra a(3);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    a.bracket.set(i, j, SparseVector(k, 1));
    a.bracket.set(j, i, SparseVector(k, -1));
  }
  return a;
}

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  StructureAlgebra s(a.dim + b.dim);
  for (const auto& [ij, v] : a.bracket.entries()) s.bracket.set(ij.first, ij.second, v);
  for (const auto& [ij, v] : b.bracket.entries()) {
    SparseVector shifted;
    for (const auto& [k, c] : v) shifted.add(k + a.dim, c);
    s.bracket.set(ij.first + a.dim, ij.second + a.dim, std::move(shifted));
  }
  return s;
}

}  // namespace ronco
