#include "ronco/term.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace ronco {

Term Term::gen(Letter i) {
  Term t;
  t.kind = Kind::Generator;
  t.generator = i;
  return t;
}

Term Term::bracket(Term a, Term b) {
  Term t;
  t.kind = Kind::Bracket;
  t.children = {std::move(a), std::move(b)};
  return t;
}

Term Term::scale(Rational s, Term a) {
  Term t;
  t.kind = Kind::Scale;
  t.scalar = std::move(s);
  t.children = {std::move(a)};
  return t;
}

Term Term::sum(std::vector<Term> terms) {
  Term t;
  t.kind = Kind::Sum;
  t.children = std::move(terms);
  return t;
}

Term Term::diff(Term a, Term b) {
  Term t;
  t.kind = Kind::Diff;
  t.children = {std::move(a), std::move(b)};
  return t;
}

Letter Term::max_generator() const {
  Letter m = kind == Kind::Generator ? generator : 0;
  for (const auto& c : children) m = std::max(m, c.max_generator());
  return m;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Term term() {
    Term lhs = atom();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        Term rhs = atom();
        if (lhs.kind == Term::Kind::Sum) {
          lhs.children.push_back(std::move(rhs));
        } else {
          lhs = Term::sum({std::move(lhs), std::move(rhs)});
        }
      } else if (c == '-') {
        ++pos_;
        lhs = Term::diff(std::move(lhs), atom());
      } else {
        return lhs;
      }
    }
  }

  bool starts_rational() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '-' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term atom() {
    if (!starts_rational()) return factor();
    std::string num;
    if (s_[pos_] == '-') {
      num = "-";
      ++pos_;
    }
    num += digits();
    Integer den = 1;
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      den = Integer(digits());
      if (den == 0) throw SyntaxError("zero denominator", at + 1);
    }
    expect('*');
    Rational r(Integer(num), den);
    r.canonicalize();
    return Term::scale(std::move(r), atom());
  }

  Term factor() {
    char c = peek();
    if (c == 'g') {
      ++pos_;
      const std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 6) throw SyntaxError("generator index too large", at + 1);
      Letter i = std::stoi(d);
      if (i < 1) throw SyntaxError("generator index must be >= 1", at + 1);
      return Term::gen(i);
    }
    if (c == '[') {
      ++pos_;
      Term a = term();
      expect(',');
      Term b = term();
      expect(']');
      return Term::bracket(std::move(a), std::move(b));
    }
    if (c == '(') {
      ++pos_;
      Term a = term();
      expect(')');
      return a;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

bool is_linear(const Term& t) { return t.kind == Term::Kind::Sum || t.kind == Term::Kind::Diff; }

std::string atom_string(const Term& t) {
  return is_linear(t) ? "(" + to_string(t) + ")" : to_string(t);
}

}  // namespace

Term parse_term(std::string_view input) { return Parser(input).parse(); }

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Generator:
      return "g" + std::to_string(t.generator);
    case Term::Kind::Bracket:
      return "[" + to_string(t.children[0]) + "," + to_string(t.children[1]) + "]";
    case Term::Kind::Scale:
      return to_string(t.scalar) + " * " + atom_string(t.children[0]);
    case Term::Kind::Sum: {
      std::string out = to_string(t.children[0]);
      for (std::size_t i = 1; i < t.children.size(); ++i) out += " + " + atom_string(t.children[i]);
      return out;
    }
    case Term::Kind::Diff:
      return to_string(t.children[0]) + " - " + atom_string(t.children[1]);
  }
  return {};
}

}  // namespace ronco
