#include "nsatz/parse.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <vector>

namespace nsatz {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto isdig = [&](std::size_t k) {
    return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]));
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (isdig(j)) ++j;
      if (j < s.size() && s[j] == '/') {
        if (!isdig(j + 1)) throw SyntaxError("expected digits after '/'", j + 1);
        ++j;
        while (isdig(j)) ++j;
      }
      out.push_back({Tok::Number, i, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, i, s.substr(i, j - i)});
      i = j;
      continue;
    }
    switch (c) {
      case '+':
        out.push_back({Tok::Plus, i, "+"});
        break;
      case '-':
        out.push_back({Tok::Minus, i, "-"});
        break;
      case '*':
        out.push_back({Tok::Star, i, "*"});
        break;
      case '^':
        out.push_back({Tok::Caret, i, "^"});
        break;
      case '(':
        out.push_back({Tok::LParen, i, "("});
        break;
      case ')':
        out.push_back({Tok::RParen, i, ")"});
        break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

// expression AST; folded into a Polynomial after parsing
struct ExprAST {
  enum class Kind { Number, Var, Add, Sub, Mul, Neg, Pow };
  Kind kind;
  Rational number;            // Number
  Variable var{""};           // Var
  int exponent = 0;           // Pow
  std::unique_ptr<ExprAST> lhs, rhs;
};

using NodePtr = std::unique_ptr<ExprAST>;

NodePtr make(ExprAST::Kind k) {
  auto n = std::make_unique<ExprAST>();
  n->kind = k;
  return n;
}

constexpr int kMaxExponent = 1 << 20;

class Parser {
public:
  Parser(std::vector<Token> toks, const VarSet& vars) : toks_(std::move(toks)), vars_(vars) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected trailing input", peek().pos);
    return e;
  }

private:
  const Token& peek() const { return toks_[k_]; }
  Token eat() { return toks_[k_++]; }
  bool accept(Tok t) {
    if (peek().kind == t) {
      ++k_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr acc;
    if (accept(Tok::Minus)) {
      auto n = make(ExprAST::Kind::Neg);
      n->lhs = term();
      acc = std::move(n);
    } else {
      acc = term();
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = eat().kind == Tok::Plus;
      auto n = make(plus ? ExprAST::Kind::Add : ExprAST::Kind::Sub);
      n->lhs = std::move(acc);
      n->rhs = term();
      acc = std::move(n);
    }
    return acc;
  }

  NodePtr term() {
    NodePtr acc = factor();
    while (accept(Tok::Star)) {
      auto n = make(ExprAST::Kind::Mul);
      n->lhs = std::move(acc);
      n->rhs = factor();
      acc = std::move(n);
    }
    return acc;
  }

  NodePtr factor() {
    NodePtr b = base();
    if (!accept(Tok::Caret)) return b;
    const Token& t = peek();
    if (t.kind == Tok::Minus)
      throw NegativeExponent("negative exponent at offset " + std::to_string(t.pos));
    if (t.kind != Tok::Number) throw SyntaxError("expected exponent", t.pos);
    Token num = eat();
    Rational e = Rational::from_string(num.text);
    if (!e.is_integer()) throw SyntaxError("exponent must be an integer", num.pos);
    if (e.numerator() > kMaxExponent) throw SyntaxError("exponent too large", num.pos);
    auto n = make(ExprAST::Kind::Pow);
    n->lhs = std::move(b);
    n->exponent = static_cast<int>(e.numerator().get_si());
    return n;
  }

  NodePtr base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        Token num = eat();
        auto n = make(ExprAST::Kind::Number);
        n->number = Rational::from_string(num.text);
        return n;
      }
      case Tok::Ident: {
        Token id = eat();
        Variable v(id.text);
        if (!vars_.contains(v))
          throw UnknownVariable("unknown variable '" + id.text + "' at offset " +
                                std::to_string(id.pos));
        auto n = make(ExprAST::Kind::Var);
        n->var = v;
        return n;
      }
      case Tok::LParen: {
        eat();
        NodePtr e = expr();
        if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
        return e;
      }
      default:
        throw SyntaxError("expected number, variable or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  const VarSet& vars_;
};

Polynomial fold(const ExprAST& n, const VarSet& vars) {
  switch (n.kind) {
    case ExprAST::Kind::Number:
      return Polynomial::constant(n.number, vars);
    case ExprAST::Kind::Var:
      return Polynomial::from_variable(n.var, vars);
    case ExprAST::Kind::Add:
      return fold(*n.lhs, vars) + fold(*n.rhs, vars);
    case ExprAST::Kind::Sub:
      return fold(*n.lhs, vars) - fold(*n.rhs, vars);
    case ExprAST::Kind::Mul:
      return fold(*n.lhs, vars) * fold(*n.rhs, vars);
    case ExprAST::Kind::Neg:
      return -fold(*n.lhs, vars);
    case ExprAST::Kind::Pow:
      return fold(*n.lhs, vars).pow(n.exponent);
  }
  throw SyntaxError("corrupt expression tree", 0);
}

}  // namespace

Polynomial parse_poly(const std::string& text, const VarSet& vars) {
  Parser p(tokenize(text), vars);
  NodePtr ast = p.parse();
  return fold(*ast, vars);
}

std::string print_poly(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  if (!order.covers(f.support()))
    throw UnknownVariable("polynomial uses a variable outside the printing order");
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return order.greater(a.first, b.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    bool neg = c.sign() < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    Rational mag = c.abs();
    if (m.is_one()) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      bool first_var = true;
      for (const auto& v : order.sequence()) {
        int e = m.degree_of(v);
        if (e == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << v.name();
        if (e > 1) os << "^" << e;
      }
    }
  }
  return os.str();
}

std::string print_poly(const Polynomial& f) {
  return print_poly(f, MonomialOrder::grevlex(f.vars()));
}

Point parse_point(const std::string& text, const VarSet& vars) {
  std::map<Variable, Rational> values;
  std::size_t i = 0;
  while (true) {
    std::size_t eq = text.find('=', i);
    if (eq == std::string::npos) throw SyntaxError("expected '=' in point assignment", i);
    std::string name = text.substr(i, eq - i);
    if (!valid_variable_name(name)) throw SyntaxError("invalid variable name '" + name + "'", i);
    Variable v(name);
    if (!vars.contains(v)) throw UnknownVariable("unknown variable '" + name + "' in point");
    std::size_t comma = text.find(',', eq + 1);
    std::string value =
        text.substr(eq + 1, comma == std::string::npos ? std::string::npos : comma - eq - 1);
    if (value.empty()) throw SyntaxError("expected value after '='", eq + 1);
    if (values.count(v)) throw SyntaxError("duplicate variable '" + name + "' in point", i);
    values.emplace(v, parse_rational(value));
    if (comma == std::string::npos) break;
    i = comma + 1;
  }
  return Point(std::move(values));
}

std::string print_point(const Point& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, r] : p) {
    if (!first) os << ",";
    first = false;
    os << v.name() << "=" << r.str();
  }
  return os.str();
}

Rational parse_rational(const std::string& text) { return Rational::from_string(text); }

bool valid_variable_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace nsatz
