#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ronco/cli.hpp"
#include "ronco/free_leibniz.hpp"
#include "ronco/free_ronco.hpp"
#include "ronco/homology.hpp"
#include "ronco/serialize.hpp"
#include "ronco/structure_algebra.hpp"

namespace py = pybind11;
using namespace ronco;

namespace {

Limits limits(int max_degree) { return Limits{max_degree}; }

template <class T>
T& expect(AnyAlgebra& a, const char* kind) {
  auto* p = std::get_if<T>(&a);
  if (!p) throw InvalidArgument(std::string("expected an algebra of kind \"") + kind + "\"");
  return *p;
}

std::vector<std::pair<std::string, std::string>> leib_terms(const LeibElement& x, int gens) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [w, c] : x) out.emplace_back(word_to_string(w, gens), to_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ronco, m) {
  m.doc() = "Free Leibniz, Lie and Ronco algebras with exact rational arithmetic";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<SyntaxError>(m, "SyntaxError", base);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", base);
  py::register_exception<DegreeOverflow>(m, "DegreeOverflow", base);

  m.attr("DEFAULT_MAX_DEGREE") = kDefaultMaxDegree;

  m.def("lyndon_words", [](int d, int n) {
    std::vector<std::string> out;
    for (const auto& w : lyndon_words(d, n)) out.push_back(word_to_string(w, d));
    return out;
  }, py::arg("d"), py::arg("n"));
  m.def("witt_dim", &witt_dim, py::arg("d"), py::arg("n"));
  m.def("graded_dim", &graded_dim, py::arg("d"), py::arg("n"));

  m.def("parse_term", [](const std::string& s) { return to_string(parse_term(s)); }, py::arg("expr"),
        "Parse and pretty-print a bracket term.");

  m.def("leib_eval", [](const std::string& expr, int gens, int max_degree) {
    return leib_terms(eval_term(parse_term(expr), gens, limits(max_degree)), gens);
  }, py::arg("expr"), py::arg("gens"), py::arg("max_degree") = kDefaultMaxDegree);
  m.def("leib_format", [](const std::string& expr, int gens, int max_degree) {
    return format_leib(eval_term(parse_term(expr), gens, limits(max_degree)), gens);
  }, py::arg("expr"), py::arg("gens"), py::arg("max_degree") = kDefaultMaxDegree);

  m.def("ronco_eval_json", [](const std::string& expr, int gens, int max_degree) {
    return to_json(eval_ronco_term(parse_term(expr), gens, limits(max_degree)), gens).dump();
  }, py::arg("expr"), py::arg("gens"), py::arg("max_degree") = kDefaultMaxDegree);
  m.def("ronco_format", [](const std::string& expr, int gens, int max_degree) {
    return format_ronco(eval_ronco_term(parse_term(expr), gens, limits(max_degree)), gens);
  }, py::arg("expr"), py::arg("gens"), py::arg("max_degree") = kDefaultMaxDegree);

  m.def("graded_kernel_json", [](int d, int n, int max_degree) {
    Json out = Json::array();
    for (const auto& e : graded_kernel_basis(d, n, limits(max_degree))) out.push_back(to_json(e, d));
    return out.dump();
  }, py::arg("d"), py::arg("n"), py::arg("max_degree") = kDefaultMaxDegree);

  m.def("truncate_json", [](int d, int max, int max_degree) {
    return dump(to_json(truncate_to_structure(d, max, limits(max_degree))));
  }, py::arg("d"), py::arg("max"), py::arg("max_degree") = kDefaultMaxDegree);
  m.def("free_nil2_json", [](int d) { return dump(to_json(free_nil2(d))); }, py::arg("d"));

  m.def("verify_json", [](const std::string& algebra, const std::string& variety) {
    auto a = parse_algebra(algebra);
    if (variety == "mu" || variety == "mu-symmetric")
      return to_json(verify_mu(expect<MuAlgebra>(a, "mu"), variety == "mu-symmetric")).dump();
    return to_json(verify_variety(expect<StructureAlgebra>(a, "leibniz"), parse_variety(variety))).dump();
  }, py::arg("algebra"), py::arg("variety"));

  m.def("convert_json", [](const std::string& algebra, const std::string& to) {
    auto a = parse_algebra(algebra);
    if (to == "mu") return dump(to_json(ronco_to_mu(expect<StructureAlgebra>(a, "leibniz"))));
    if (to == "ronco") return dump(to_json(mu_to_ronco(expect<MuAlgebra>(a, "mu"))));
    throw InvalidArgument("convert target must be \"mu\" or \"ronco\"");
  }, py::arg("algebra"), py::arg("to"));

  m.def("homology_json", [](const std::string& algebra, const std::string& which) {
    auto a = parse_algebra(algebra);
    const auto& s = expect<StructureAlgebra>(a, "leibniz");
    if (which == "hl1") return dump(to_json(hl1(s)));
    if (which == "hl2") return dump(to_json(hl2(s)));
    if (which == "hr0") return dump(to_json(hr0(s)));
    if (which == "h1ad") return dump(to_json(h1_adjoint(s)));
    throw InvalidArgument("unknown homology '" + which + "'");
  }, py::arg("algebra"), py::arg("which"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run one CLI command in-process; returns (exit_code, stdout, stderr).");
}
