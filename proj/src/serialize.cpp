#include "ronco/serialize.hpp"

#include <functional>

#include "ronco/errors.hpp"

namespace ronco {

namespace {

Json table_to_json(const BilinearTable& t) {
  Json rows = Json::array();
  for (const auto& [ij, v] : t.entries()) {
    Json c = Json::array();
    for (const auto& [k, x] : v) c.push_back(Json{{"k", k + 1}, {"v", to_string(x)}});
    rows.push_back(Json{{"i", ij.first + 1}, {"j", ij.second + 1}, {"c", std::move(c)}});
  }
  return rows;
}

std::size_t index_field(const Json& row, const char* key, std::size_t dim) {
  if (!row.contains(key) || !row[key].is_number_integer())
    throw InvalidArgument(std::string("missing integer field \"") + key + "\"");
  const auto v = row[key].get<long long>();
  if (v < 1 || static_cast<unsigned long long>(v) > dim)
    throw InvalidArgument(std::string("index \"") + key + "\" = " + std::to_string(v) + " outside 1.." +
                          std::to_string(dim));
  return static_cast<std::size_t>(v - 1);
}

BilinearTable table_from_json(const Json& rows, std::size_t dim, const char* name) {
  if (!rows.is_array()) throw InvalidArgument(std::string("\"") + name + "\" must be an array");
  BilinearTable t(dim);
  for (const auto& row : rows) {
    if (!row.is_object()) throw InvalidArgument(std::string("rows of \"") + name + "\" must be objects");
    const auto i = index_field(row, "i", dim);
    const auto j = index_field(row, "j", dim);
    if (!t.get(i, j).empty()) throw InvalidArgument("duplicate structure-constant row");
    if (!row.contains("c") || !row["c"].is_array()) throw InvalidArgument("row without \"c\" array");
    SparseVector v;
    for (const auto& e : row["c"]) {
      const auto k = index_field(e, "k", dim);
      if (!e.contains("v") || !e["v"].is_string()) throw InvalidArgument("entry without string \"v\"");
      v.add(k, parse_rational(e["v"].get<std::string>()));
    }
    t.set(i, j, std::move(v));
  }
  return t;
}

std::string format_terms(const std::vector<std::pair<std::string, Rational>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [label, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "·";
    out += label;
    first = false;
  }
  return out;
}

}  // namespace

Json to_json(const StructureAlgebra& a) {
  Json j;
  j["dim"] = a.dim;
  j["kind"] = "leibniz";
  j["bracket"] = table_to_json(a.bracket);
  return j;
}

Json to_json(const MuAlgebra& m) {
  Json j;
  j["dim"] = m.dim;
  j["kind"] = "mu";
  j["lie_bracket"] = table_to_json(m.lie_bracket);
  j["product"] = table_to_json(m.product);
  return j;
}

Json to_json(const HomologyReport& r) {
  Json reps = Json::array();
  for (const auto& v : r.representatives) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    reps.push_back(std::move(row));
  }
  Json j;
  j["dimension"] = r.dimension;
  j["representatives"] = std::move(reps);
  return j;
}

Json to_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json residual = Json::array();
    for (const auto& x : v.residual) residual.push_back(to_string(x));
    violations.push_back(Json{{"axiom", v.axiom}, {"indices", v.indices}, {"residual", std::move(residual)}});
  }
  Json j;
  j["variety"] = r.variety;
  j["ok"] = r.ok();
  j["violations"] = std::move(violations);
  return j;
}

Json to_json(const RoncoElement& x, int gens) {
  Json deg1 = Json::array(), higher = Json::array();
  for (const auto& [key, c] : x) {
    if (key.lie.empty())
      deg1.push_back(Json::array({key.gen, to_string(c)}));
    else
      higher.push_back(Json::array({word_to_string(key.lie, gens), key.gen, to_string(c)}));
  }
  Json j;
  j["degree1"] = std::move(deg1);
  j["higher"] = std::move(higher);
  return j;
}

AnyAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("algebra file must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw InvalidArgument("\"dim\" must be a non-negative integer");
  const auto dim = static_cast<std::size_t>(j["dim"].get<long long>());
  if (!j.contains("kind") || !j["kind"].is_string()) throw InvalidArgument("\"kind\" must be a string");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "leibniz") {
    StructureAlgebra a(dim);
    a.bracket = table_from_json(j.value("bracket", Json::array()), dim, "bracket");
    return a;
  }
  if (kind == "mu") {
    MuAlgebra m(dim);
    m.lie_bracket = table_from_json(j.value("lie_bracket", Json::array()), dim, "lie_bracket");
    m.product = table_from_json(j.value("product", Json::array()), dim, "product");
    return m;
  }
  throw InvalidArgument("unknown algebra kind '" + kind + "'");
}

AnyAlgebra parse_algebra(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
  return algebra_from_json(j);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_leib(const LeibElement& x, int gens) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [w, c] : x) terms.emplace_back(word_to_string(w, gens), c);
  return format_terms(terms);
}

std::string format_ronco(const RoncoElement& x, int gens) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [key, c] : x) {
    std::string label = key.lie.empty() ? "g" + std::to_string(key.gen)
                                        : "[" + word_to_string(key.lie, gens) + "|" + std::to_string(key.gen) + "]";
    terms.emplace_back(std::move(label), c);
  }
  return format_terms(terms);
}

}  // namespace ronco
