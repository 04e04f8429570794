#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ronco/cli.hpp"
#include "ronco/serialize.hpp"
#include "ronco/term.hpp"

using namespace ronco;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ronco_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_term examples") {
  CHECK(parse_term("[g1,g2]") == Term::bracket(Term::gen(1), Term::gen(2)));
  auto expected = Term::diff(Term::scale(Rational(1, 2), Term::bracket(Term::gen(1), Term::bracket(Term::gen(2), Term::gen(3)))),
                             Term::bracket(Term::gen(3), Term::gen(1)));
  CHECK(parse_term("1/2 * [g1,[g2,g3]] - [g3,g1]") == expected);
  try {
    parse_term("[g1 g2]");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 5);
  }
  CHECK_THROWS_AS(parse_term("1/0 * g1"), SyntaxError);
  CHECK_THROWS_AS(parse_term("g0"), SyntaxError);
  CHECK_THROWS_AS(parse_term("[g1,g2"), SyntaxError);
  CHECK_THROWS_AS(parse_term(""), SyntaxError);
}

TEST_CASE("term printer round trip") {
  const char* corpus[] = {"g1",
                          "[g1,g2]",
                          "1/2 * [g1,[g2,g3]] - [g3,g1]",
                          "g1 + g2 + [g1,g2]",
                          "g1 - g2 - g3",
                          "g1 - (g2 - g3)",
                          "2 * (g1 + g2)",
                          "-3/4 * [[g1,g1],g2] + g2",
                          "g1 + -1 * g2",
                          "([g1,g2] + g3) - 2 * 3 * g4",
                          "  [ g1 , [ g2 , g1 ] ]  "};
  for (const char* s : corpus) {
    auto t = parse_term(s);
    CHECK(parse_term(to_string(t)) == t);
  }
}

TEST_CASE("cli golden outputs") {
  CHECK(run({"ronco-eval", "--gens", "2", "--expr", "[[g1,g1],g2]"}).out == "0\n");
  CHECK(run({"witt", "--gens", "2", "--max", "4"}).out == "1\t2\n2\t1\n3\t2\n4\t3\n");
  CHECK(run({"leib-bracket", "--gens", "3", "--expr", "[g1,[g2,g3]]"}).out == "123 - 132\n");
  CHECK(run({"lyndon", "--gens", "2", "--len", "4"}).out == "1112\n1122\n1222\n");
  CHECK(run({"ronco-dims", "--gens", "2", "--max", "3"}).out == "1\t2\n2\t4\n3\t2\n");
  CHECK(run({"ronco-eval", "--gens", "2", "--expr", "1/2 * [[g1,g2],g1]"}).out == "1/2·[12|1]\n");
  CHECK(run({"graded-kernel", "--gens", "2", "--deg", "3"}).out == "dimension 0\n");
}

TEST_CASE("cli file workflow") {
  auto nil = temp_file("nil2.json"), mu = temp_file("mu.json"), back = temp_file("back.json"),
       trunc = temp_file("trunc.json");
  REQUIRE(run({"free-nil2", "--dim", "3", "-o", nil.string()}).code == 0);
  auto h = run({"homology", "--which", "hr0", nil.string()});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("{\n  \"dimension\": 7,", 0) == 0);
  CHECK(run({"verify", "--variety", "lie", nil.string()}).code == 0);

  REQUIRE(run({"ronco-truncate", "--gens", "2", "--max", "4", "-o", trunc.string()}).code == 0);
  CHECK(run({"verify", "--variety", "ronco", trunc.string()}).code == 0);
  auto lie = run({"verify", "--variety", "lie", trunc.string()});
  CHECK(lie.code == 1);
  CHECK(lie.out.find("lie-square") != std::string::npos);
  REQUIRE(run({"convert", "--to", "mu", trunc.string(), "-o", mu.string()}).code == 0);
  CHECK(run({"verify", "--variety", "mu", mu.string()}).code == 0);
  CHECK(run({"verify", "--variety", "mu-symmetric", mu.string()}).code == 1);
  REQUIRE(run({"convert", "--to", "ronco", mu.string(), "-o", back.string()}).code == 0);
  CHECK(slurp(back) == slurp(trunc));
  CHECK(run({"homology", "--which", "hl2", trunc.string()}).code == 0);
  CHECK(run({"homology", "--which", "hr0", trunc.string()}).code == 1);
  CHECK(run({"verify", "--variety", "ronco", mu.string()}).code == 2);

  for (const auto& p : {nil, mu, back, trunc}) std::filesystem::remove(p);
}

TEST_CASE("cli input errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"witt", "--gens", "2"}).code == 2);
  CHECK(run({"witt", "--gens", "2", "--max", "3", "--bogus"}).code == 2);
  auto bad = run({"leib-bracket", "--gens", "2", "--expr", "[g1 g2]"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 5") != std::string::npos);
  CHECK(run({"leib-bracket", "--gens", "2", "--expr", "[g1,g3]"}).code == 2);
  CHECK(run({"homology", "--which", "hl2", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"lyndon", "--gens", "2", "--len", "3", "--help"}).code == 0);
}

TEST_CASE("RONCO_MAX_DEGREE overrides the degree cap") {
  const std::string deep = "[[[[[[[[g1,g2],g1],g1],g1],g1],g1],g1],g2]";
  CHECK(run({"leib-bracket", "--gens", "2", "--expr", deep}).code == 2);
  setenv("RONCO_MAX_DEGREE", "9", 1);
  CHECK(run({"leib-bracket", "--gens", "2", "--expr", deep}).code == 0);
  setenv("RONCO_MAX_DEGREE", "nonsense", 1);
  CHECK(run({"witt", "--gens", "2", "--max", "2"}).code == 2);
  unsetenv("RONCO_MAX_DEGREE");
}

TEST_CASE("algebra JSON schema") {
  auto text = dump(to_json(free_nil2(2)));
  CHECK(text ==
        "{\n  \"dim\": 3,\n  \"kind\": \"leibniz\",\n  \"bracket\": [\n    {\n      \"i\": 1,\n      \"j\": 2,\n"
        "      \"c\": [\n        {\n          \"k\": 3,\n          \"v\": \"1\"\n        }\n      ]\n    },\n"
        "    {\n      \"i\": 2,\n      \"j\": 1,\n      \"c\": [\n        {\n          \"k\": 3,\n"
        "          \"v\": \"-1\"\n        }\n      ]\n    }\n  ]\n}\n");
  CHECK(std::get<StructureAlgebra>(parse_algebra(text)) == free_nil2(2));
  CHECK_THROWS_AS(parse_algebra("{\"dim\": 2, \"kind\": \"leibniz\", \"bracket\": [{\"i\": 3, \"j\": 1, \"c\": []}]}"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_algebra("{\"dim\": 1, \"kind\": \"leibniz\", \"bracket\": [{\"i\": 1, \"j\": 1, \"c\": [{\"k\": 1, \"v\": \"1/0\"}]}]}"),
                  InvalidArgument);
  CHECK_THROWS_AS(parse_algebra("{\"dim\": 1, \"kind\": \"weird\"}"), InvalidArgument);
  CHECK_THROWS_AS(parse_algebra("not json"), InvalidArgument);
}

TEST_CASE("Ronco element JSON") {
  RoncoElement x;
  x.add(RoncoKey{{}, 2}, Rational(3));
  x.add(RoncoKey{{1, 1, 2}, 2}, Rational(1, 2));
  auto j = to_json(x, 2);
  CHECK(j.dump() == R"({"degree1":[[2,"3"]],"higher":[["112",2,"1/2"]]})");
  CHECK(format_ronco(x, 2) == "3·g2 + 1/2·[112|2]");
}
