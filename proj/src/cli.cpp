#include "ronco/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ronco/errors.hpp"
#include "ronco/free_leibniz.hpp"
#include "ronco/free_ronco.hpp"
#include "ronco/homology.hpp"
#include "ronco/serialize.hpp"
#include "ronco/structure_algebra.hpp"
#include "ronco/term.hpp"

namespace ronco::cli {

Limits limits_from_env() {
  Limits limits;
  if (const char* v = std::getenv("RONCO_MAX_DEGREE"); v && *v) {
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 1 || n > 64) throw InvalidArgument(std::string("bad RONCO_MAX_DEGREE '") + v + "'");
    limits.max_degree = static_cast<int>(n);
  }
  return limits;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

struct Options {
  int gens = 0;
  int len = 0;
  int max = 0;
  int deg = 0;
  int dim = 0;
  std::string expr;
  std::string output;
  std::string input;
  std::string variety;
  std::string target;
  std::string which;
};

int do_verify(const Options& o, std::ostream& out) {
  auto algebra = parse_algebra(read_file(o.input));
  VerificationReport report;
  if (o.variety == "mu" || o.variety == "mu-symmetric") {
    auto* m = std::get_if<MuAlgebra>(&algebra);
    if (!m) throw InvalidArgument("variety " + o.variety + " needs a file of kind \"mu\"");
    report = verify_mu(*m, o.variety == "mu-symmetric");
  } else {
    auto* a = std::get_if<StructureAlgebra>(&algebra);
    if (!a) throw InvalidArgument("variety " + o.variety + " needs a file of kind \"leibniz\"");
    report = verify_variety(*a, parse_variety(o.variety));
  }
  out << dump(to_json(report));
  return report.ok() ? kOk : kVerificationFailed;
}

int do_convert(const Options& o, std::ostream& out) {
  auto algebra = parse_algebra(read_file(o.input));
  if (o.target == "mu") {
    auto* a = std::get_if<StructureAlgebra>(&algebra);
    if (!a) throw InvalidArgument("convert --to mu needs a file of kind \"leibniz\"");
    emit(dump(to_json(ronco_to_mu(*a))), o.output, out);
  } else {
    auto* m = std::get_if<MuAlgebra>(&algebra);
    if (!m) throw InvalidArgument("convert --to ronco needs a file of kind \"mu\"");
    emit(dump(to_json(mu_to_ronco(*m))), o.output, out);
  }
  return kOk;
}

int do_homology(const Options& o, std::ostream& out) {
  auto algebra = parse_algebra(read_file(o.input));
  auto* a = std::get_if<StructureAlgebra>(&algebra);
  if (!a) throw InvalidArgument("homology needs a file of kind \"leibniz\"");
  HomologyReport r;
  if (o.which == "hl1")
    r = hl1(*a);
  else if (o.which == "hl2")
    r = hl2(*a);
  else if (o.which == "hr0")
    r = hr0(*a);
  else
    r = h1_adjoint(*a);
  out << dump(to_json(r));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free Leibniz, Lie and Ronco algebras; structure-constant verification and homology", "ronco"};
  app.require_subcommand(1);
  Options o;

  auto positive = CLI::PositiveNumber;

  auto* lyndon = app.add_subcommand("lyndon", "List the Lyndon words of a given length");
  lyndon->add_option("--gens", o.gens, "alphabet size")->required()->check(positive);
  lyndon->add_option("--len", o.len, "word length")->required()->check(positive);

  auto* witt = app.add_subcommand("witt", "Table of dim Lie_n(V) for n = 1..max");
  witt->add_option("--gens", o.gens)->required()->check(positive);
  witt->add_option("--max", o.max)->required()->check(positive);

  auto* leib = app.add_subcommand("leib-bracket", "Evaluate a bracket term in the free Leibniz algebra");
  leib->add_option("--gens", o.gens)->required()->check(positive);
  leib->add_option("--expr", o.expr)->required();

  auto* reval = app.add_subcommand("ronco-eval", "Evaluate a bracket term in the free Ronco algebra");
  reval->add_option("--gens", o.gens)->required()->check(positive);
  reval->add_option("--expr", o.expr)->required();

  auto* rdims = app.add_subcommand("ronco-dims", "Graded dimensions of the free Ronco algebra");
  rdims->add_option("--gens", o.gens)->required()->check(positive);
  rdims->add_option("--max", o.max)->required()->check(positive);

  auto* gker = app.add_subcommand("graded-kernel", "Basis of Ker(Lie_{n-1}(V)⊗V → Lie_n(V))");
  gker->add_option("--gens", o.gens)->required()->check(positive);
  gker->add_option("--deg", o.deg)->required()->check(CLI::Range(2, 64));

  auto* trunc = app.add_subcommand("ronco-truncate", "Write a degree truncation of the free Ronco algebra as JSON");
  trunc->add_option("--gens", o.gens)->required()->check(positive);
  trunc->add_option("--max", o.max)->required()->check(positive);
  trunc->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* nil2 = app.add_subcommand("free-nil2", "Write the free class-two nilpotent Lie algebra as JSON");
  nil2->add_option("--dim", o.dim, "number of generators")->required()->check(positive);
  nil2->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check an algebra file against a variety");
  verify->add_option("--variety", o.variety)
      ->required()
      ->check(CLI::IsMember({"leibniz", "lie", "ronco", "symmetric", "mu", "mu-symmetric"}));
  verify->add_option("file", o.input)->required();

  auto* convert = app.add_subcommand("convert", "Convert between Ronco and mu-algebra structure constants");
  convert->add_option("--to", o.target)->required()->check(CLI::IsMember({"mu", "ronco"}));
  convert->add_option("file", o.input)->required();
  convert->add_option("-o,--output", o.output, "output file (default stdout)");

  auto* homology = app.add_subcommand("homology", "HL1, HL2, HR0 or H1(g, g^ad) of an algebra file");
  homology->add_option("--which", o.which)->required()->check(CLI::IsMember({"hl1", "hl2", "hr0", "h1ad"}));
  homology->add_option("file", o.input)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kInputError;
  }

  try {
    const Limits limits = limits_from_env();
    if (lyndon->parsed()) {
      for (const auto& w : lyndon_words(o.gens, o.len)) out << word_to_string(w, o.gens) << "\n";
    } else if (witt->parsed()) {
      for (int n = 1; n <= o.max; ++n) out << n << "\t" << witt_dim(o.gens, n) << "\n";
    } else if (leib->parsed()) {
      out << format_leib(eval_term(parse_term(o.expr), o.gens, limits), o.gens) << "\n";
    } else if (reval->parsed()) {
      out << format_ronco(eval_ronco_term(parse_term(o.expr), o.gens, limits), o.gens) << "\n";
    } else if (rdims->parsed()) {
      for (int n = 1; n <= o.max; ++n) out << n << "\t" << graded_dim(o.gens, n) << "\n";
    } else if (gker->parsed()) {
      auto basis = graded_kernel_basis(o.gens, o.deg, limits);
      out << "dimension " << basis.size() << "\n";
      for (const auto& e : basis) out << format_ronco(e, o.gens) << "\n";
    } else if (trunc->parsed()) {
      emit(dump(to_json(truncate_to_structure(o.gens, o.max, limits))), o.output, out);
    } else if (nil2->parsed()) {
      emit(dump(to_json(free_nil2(o.dim))), o.output, out);
    } else if (verify->parsed()) {
      return do_verify(o, out);
    } else if (convert->parsed()) {
      return do_convert(o, out);
    } else if (homology->parsed()) {
      return do_homology(o, out);
    }
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << "\n" << dump(to_json(e.report));
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace ronco::cli
