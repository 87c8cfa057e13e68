#pragma once

// Text forms: a tokenizer and recursive-descent parser for maps, paths and
// semialgebraic sets, and the canonical printers they round-trip with.
// The grammar is documented in docs/grammar.ebnf.

#include "sinfty/laurent.hpp"
#include "sinfty/mpoly.hpp"
#include "sinfty/mpoly_gcd.hpp"
#include "sinfty/regular_map.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sinfty {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col),
        message_(msg) {}
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& message() const { return message_; }

 private:
  int line_, col_;
  std::string message_;
};

// ---------------------------------------------------------------------------
// variable names

enum class VarStyle {
  Affine,       // x, y, z when there are at most three variables, else x1..xn
  Homogeneous,  // x0, x1, ..., xn
};

inline std::string var_name(std::size_t i, std::size_t nvars, VarStyle style) {
  if (style == VarStyle::Homogeneous) return "x" + std::to_string(i);
  if (nvars <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

// ---------------------------------------------------------------------------
// canonical printing

namespace detail {

inline std::string monomial_text(const Exponent& e, std::size_t nvars, VarStyle style) {
  std::string s;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(i, nvars, style);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

inline void append_term(std::string& out, const Rat& c, const std::string& mono) {
  const bool neg = c < 0;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  Rat a = abs(c);
  if (mono.empty()) {
    out += to_string(a);
  } else if (a == 1) {
    out += mono;
  } else {
    out += to_string(a) + "*" + mono;
  }
}

}  // namespace detail

/// Graded-lex, largest term first, explicit `*` and `^`.
inline std::string to_text(const MPoly& p, VarStyle style = VarStyle::Affine) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) detail::append_term(out, t.coeff, detail::monomial_text(t.exp, p.nvars(), style));
  return out;
}

/// Ascending powers of t.
inline std::string to_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
    detail::append_term(out, c, mono);
  }
  return out;
}

inline std::string to_text(const RationalPath& path) {
  std::string s = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ", ";
    s += to_text(path[i]);
  }
  return s + ")";
}

inline std::string to_text(const RegularMap& f) {
  std::string s = "map R^" + std::to_string(f.n()) + " -> R^" + std::to_string(f.m()) + " : (";
  for (std::size_t j = 0; j < f.m(); ++j) {
    if (j) s += ", ";
    s += to_text(f.numerators()[j]);
  }
  s += ")";
  const MPoly& f0 = f.denominator();
  if (!(f0.is_constant() && f0.constant_value() == 1)) {
    s += f0.size() > 1 ? " / (" + to_text(f0) + ")" : " / " + to_text(f0);
  }
  return s;
}

// ---------------------------------------------------------------------------
// semialgebraic sets

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

inline std::string to_text(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

inline bool relation_holds(Relation r, int sign) {
  switch (r) {
    case Relation::Less: return sign < 0;
    case Relation::LessEq: return sign <= 0;
    case Relation::Equal: return sign == 0;
    case Relation::GreaterEq: return sign >= 0;
    case Relation::Greater: return sign > 0;
  }
  return false;
}

/// Boolean combination of atoms `poly REL 0`. And/Or nodes are flattened:
/// a child never has the same kind as its parent.
struct SetNode {
  enum class Kind { Atom, And, Or };
  Kind kind = Kind::Atom;
  Relation rel = Relation::Equal;
  MPoly poly;
  std::vector<SetNode> children;

  static SetNode atom(MPoly p, Relation r) {
    SetNode n;
    n.kind = Kind::Atom;
    n.poly = std::move(p);
    n.rel = r;
    return n;
  }
  static SetNode join(Kind k, std::vector<SetNode> parts) {
    if (parts.size() == 1) return std::move(parts[0]);
    SetNode n;
    n.kind = k;
    for (auto& c : parts) {
      if (c.kind == k) {
        for (auto& cc : c.children) n.children.push_back(std::move(cc));
      } else {
        n.children.push_back(std::move(c));
      }
    }
    return n;
  }

  friend bool operator==(const SetNode& a, const SetNode& b) {
    return a.kind == b.kind && a.rel == b.rel && a.poly == b.poly && a.children == b.children;
  }
};

class SemialgebraicSet {
 public:
  SemialgebraicSet() = default;
  SemialgebraicSet(std::size_t n, SetNode root) : n_(n), root_(std::move(root)) { check(root_); }

  std::size_t n() const { return n_; }
  const SetNode& root() const { return root_; }

  bool contains(std::span<const Rat> x) const { return eval(root_, x); }

  /// Disjunctive normal form: a list of conjunctions of atoms.
  std::vector<std::vector<SetNode>> dnf() const { return dnf_of(root_); }

  friend bool operator==(const SemialgebraicSet& a, const SemialgebraicSet& b) {
    return a.n_ == b.n_ && a.root_ == b.root_;
  }

 private:
  void check(const SetNode& node) const {
    if (node.kind == SetNode::Kind::Atom) {
      if (node.poly.nvars() != n_) throw std::invalid_argument("set atom has the wrong number of variables");
      return;
    }
    for (const auto& c : node.children) check(c);
  }
  static bool eval(const SetNode& node, std::span<const Rat> x) {
    switch (node.kind) {
      case SetNode::Kind::Atom: return relation_holds(node.rel, sgn(node.poly.evaluate(x)));
      case SetNode::Kind::And:
        for (const auto& c : node.children)
          if (!eval(c, x)) return false;
        return true;
      case SetNode::Kind::Or:
        for (const auto& c : node.children)
          if (eval(c, x)) return true;
        return false;
    }
    return false;
  }
  static std::vector<std::vector<SetNode>> dnf_of(const SetNode& node) {
    if (node.kind == SetNode::Kind::Atom) return {{node}};
    if (node.kind == SetNode::Kind::Or) {
      std::vector<std::vector<SetNode>> out;
      for (const auto& c : node.children) {
        auto part = dnf_of(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    std::vector<std::vector<SetNode>> acc{{}};
    for (const auto& c : node.children) {
      auto part = dnf_of(c);
      std::vector<std::vector<SetNode>> next;
      for (const auto& a : acc)
        for (const auto& b : part) {
          auto conj = a;
          conj.insert(conj.end(), b.begin(), b.end());
          next.push_back(std::move(conj));
        }
      acc = std::move(next);
    }
    return acc;
  }

  std::size_t n_ = 0;
  SetNode root_;
};

inline std::string to_text(const SetNode& node, std::size_t nvars, SetNode::Kind parent = SetNode::Kind::Atom) {
  if (node.kind == SetNode::Kind::Atom) return to_text(node.poly) + " " + to_text(node.rel) + " 0";
  std::string sep = node.kind == SetNode::Kind::And ? " and " : " or ";
  std::string s;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) s += sep;
    s += to_text(node.children[i], nvars, node.kind);
  }
  if (parent != SetNode::Kind::Atom) s = "(" + s + ")";
  return s;
}

inline std::string to_text(const SemialgebraicSet& s) {
  return "set R^" + std::to_string(s.n()) + " : " + to_text(s.root(), s.n());
}

// ---------------------------------------------------------------------------
// tokenizer

namespace detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Colon, Arrow, Rel, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && (src[j] == '.' || src[j] == 'e' || src[j] == 'E') &&
          !(src[j] != '.' && (j + 1 >= src.size() || !std::isdigit(static_cast<unsigned char>(src[j + 1]))))) {
        throw ParseError(tl, tc, "decimal literals are not allowed; write exact rationals such as 1/10");
      }
      if (j < src.size() && src[j] == '.') {
        throw ParseError(tl, tc, "decimal literals are not allowed; write exact rationals such as 1/10");
      }
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '.') throw ParseError(tl, tc, "decimal literals are not allowed; write exact rationals such as 1/10");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", tl, tc});
      advance(2);
      continue;
    }
    if (two == "<=" || two == ">=" || two == "==") {
      out.push_back({Tok::Rel, std::string(two), tl, tc});
      advance(2);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case ':': k = Tok::Colon; break;
      case '<':
      case '>':
      case '=': k = Tok::Rel; break;
      default: throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Expression tree; evaluated only after every variable has been seen so that
// the arity is known.
struct Expr {
  enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, Pow };
  Op op;
  Rat value;
  std::size_t var = 0;
  int exponent = 0;
  int line = 0, col = 0;
  std::vector<std::shared_ptr<Expr>> args;
};
using ExprPtr = std::shared_ptr<Expr>;

/// Polynomial fraction num/den used while evaluating expressions.
struct Fraction {
  MPoly num, den;

  static Fraction of(MPoly p) {
    std::size_t n = p.nvars();
    return {std::move(p), MPoly::constant(n, Rat(1))};
  }
  Fraction normalized() const {
    if (den.is_constant()) {
      Rat c = den.constant_value();
      return {(1 / c) * num, MPoly::constant(num.nvars(), Rat(1))};
    }
    MPoly g = gcd(num, den);
    MPoly n2 = num / g, d2 = den / g;
    Rat s = 1 / d2.leading_coeff();
    return {s * n2, s * d2};
  }
};

enum class VarMode { Affine, Path };

class Parser {
 public:
  Parser(std::string_view src, VarMode mode) : toks_(tokenize(src)), mode_(mode) {}

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view s) const { return peek().kind == Tok::Ident && peek().text == s; }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail(peek(), "expected " + what + (peek().kind == Tok::End ? " before end of input" : ", found '" + peek().text + "'"));
    return take();
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.col, msg); }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t p) { pos_ = p; }
  std::size_t max_var() const { return max_var_; }

  /// `R ^ NUMBER`
  int parse_space() {
    Token r = expect(Tok::Ident, "'R'");
    if (r.text != "R") fail(r, "expected 'R'");
    expect(Tok::Caret, "'^'");
    Token num = expect(Tok::Number, "a dimension");
    return std::stoi(num.text);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = take();
      ExprPtr rhs = parse_term();
      lhs = node(op.kind == Tok::Plus ? Expr::Op::Add : Expr::Op::Sub, op, {lhs, rhs});
    }
    return lhs;
  }

 private:
  static ExprPtr node(Expr::Op op, const Token& t, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->line = t.line;
    e->col = t.col;
    e->args = std::move(args);
    return e;
  }

  bool starts_primary() const { return at(Tok::Number) || at(Tok::LParen) || (at(Tok::Ident) && !is_keyword(peek().text)); }
  static bool is_keyword(const std::string& s) { return s == "and" || s == "or"; }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (true) {
      if (at(Tok::Star) || at(Tok::Slash)) {
        Token op = take();
        ExprPtr rhs = parse_unary();
        lhs = node(op.kind == Tok::Star ? Expr::Op::Mul : Expr::Op::Div, op, {lhs, rhs});
      } else if (starts_primary()) {
        Token op = peek();  // implicit multiplication: 2x, (a)(b)
        ExprPtr rhs = parse_power();
        lhs = node(Expr::Op::Mul, op, {lhs, rhs});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr parse_unary() {
    if (at(Tok::Minus)) {
      Token op = take();
      return node(Expr::Op::Neg, op, {parse_unary()});
    }
    if (at(Tok::Plus)) {
      take();
      return parse_unary();
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (!at(Tok::Caret)) return base;
    Token op = take();
    int sign = 1;
    bool paren = false;
    if (at(Tok::LParen)) {
      take();
      paren = true;
    }
    if (at(Tok::Minus)) {
      take();
      sign = -1;
    } else if (at(Tok::Plus)) {
      take();
    }
    Token num = expect(Tok::Number, "an integer exponent");
    if (num.text.size() > 6) fail(num, "exponent too large");
    if (paren) expect(Tok::RParen, "')'");
    auto e = node(Expr::Op::Pow, op, {base});
    e->exponent = sign * std::stoi(num.text);
    return e;
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      take();
      auto e = node(Expr::Op::Num, t, {});
      e->value = Rat(BigInt(t.text));
      return e;
    }
    if (t.kind == Tok::LParen) {
      take();
      ExprPtr inner = parse_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident && !is_keyword(t.text)) {
      Token id = take();
      auto e = node(Expr::Op::Var, id, {});
      e->var = variable_index(id);
      if (mode_ == VarMode::Affine) max_var_ = std::max(max_var_, e->var + 1);
      return e;
    }
    fail(t, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::size_t variable_index(const Token& id) const {
    const std::string& s = id.text;
    if (mode_ == VarMode::Path) {
      if (s == "t") return 0;
      fail(id, "unknown symbol '" + s + "': paths use the single variable t");
    }
    if (s == "x") return 0;
    if (s == "y") return 1;
    if (s == "z") return 2;
    if (s.size() >= 2 && s[0] == 'x' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int k = std::stoi(s.substr(1));
      if (k >= 1 && k <= static_cast<int>(kMaxVars)) return static_cast<std::size_t>(k - 1);
    }
    fail(id, "unknown symbol '" + s + "': variables are x1..x7 (aliases x, y, z)");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarMode mode_;
  std::size_t max_var_ = 0;
};

inline Fraction evaluate(const Expr& e, std::size_t nvars) {
  auto fail = [&](const std::string& msg) -> Fraction { throw ParseError(e.line, e.col, msg); };
  switch (e.op) {
    case Expr::Op::Num: return Fraction::of(MPoly::constant(nvars, e.value));
    case Expr::Op::Var: return Fraction::of(MPoly::variable(nvars, e.var));
    case Expr::Op::Neg: {
      Fraction a = evaluate(*e.args[0], nvars);
      return {-a.num, a.den};
    }
    case Expr::Op::Add:
    case Expr::Op::Sub: {
      Fraction a = evaluate(*e.args[0], nvars), b = evaluate(*e.args[1], nvars);
      MPoly bn = e.op == Expr::Op::Add ? b.num : -b.num;
      if (a.den == b.den) return Fraction{a.num + bn, a.den}.normalized();
      return Fraction{a.num * b.den + bn * a.den, a.den * b.den}.normalized();
    }
    case Expr::Op::Mul: {
      Fraction a = evaluate(*e.args[0], nvars), b = evaluate(*e.args[1], nvars);
      return Fraction{a.num * b.num, a.den * b.den}.normalized();
    }
    case Expr::Op::Div: {
      Fraction a = evaluate(*e.args[0], nvars), b = evaluate(*e.args[1], nvars);
      if (b.num.is_zero()) return fail("division by zero");
      return Fraction{a.num * b.den, a.den * b.num}.normalized();
    }
    case Expr::Op::Pow: {
      Fraction a = evaluate(*e.args[0], nvars);
      int k = e.exponent;
      if (k < 0) {
        if (a.num.is_zero()) return fail("zero raised to a negative power");
        a = Fraction{a.den, a.num}.normalized();
        k = -k;
      }
      return Fraction{a.num.pow(static_cast<unsigned>(k)), a.den.pow(static_cast<unsigned>(k))};
    }
  }
  return fail("internal: unknown expression node");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// entry points

/// `[map R^n -> R^m :] (e1, ..., em) [/ e0]`; components may be fractions.
inline RegularMap parse_map(std::string_view text) {
  detail::Parser p(text, detail::VarMode::Affine);
  std::optional<int> n_decl, m_decl;
  detail::Token head = p.peek();
  if (p.at_ident("map")) {
    p.take();
    n_decl = p.parse_space();
    p.expect(detail::Tok::Arrow, "'->'");
    m_decl = p.parse_space();
    p.expect(detail::Tok::Colon, "':'");
  }
  detail::Token open = p.expect(detail::Tok::LParen, "'(' opening the component tuple");
  std::vector<detail::ExprPtr> comps{p.parse_expr()};
  while (p.at(detail::Tok::Comma)) {
    p.take();
    comps.push_back(p.parse_expr());
  }
  p.expect(detail::Tok::RParen, "')' closing the component tuple");
  detail::ExprPtr common;
  if (p.at(detail::Tok::Slash)) {
    p.take();
    common = p.parse_expr();
  }
  if (!p.at(detail::Tok::End)) p.fail(p.peek(), "unexpected '" + p.peek().text + "' after the map");

  std::size_t n = std::max<std::size_t>(1, p.max_var());
  if (n_decl) {
    if (*n_decl < 1 || *n_decl >= static_cast<int>(kMaxVars)) p.fail(head, "domain dimension out of range");
    if (static_cast<std::size_t>(*n_decl) < p.max_var()) p.fail(head, "map uses more variables than R^" + std::to_string(*n_decl));
    n = static_cast<std::size_t>(*n_decl);
  }
  if (m_decl && static_cast<std::size_t>(*m_decl) != comps.size()) {
    p.fail(open, "declared R^" + std::to_string(*m_decl) + " but found " + std::to_string(comps.size()) + " components");
  }

  std::vector<detail::Fraction> fr;
  for (const auto& c : comps) fr.push_back(detail::evaluate(*c, n));
  if (common) {
    detail::Fraction d = detail::evaluate(*common, n);
    if (d.num.is_zero()) throw ParseError(common->line, common->col, "common denominator is zero");
    for (auto& f : fr) f = detail::Fraction{f.num * d.den, f.den * d.num}.normalized();
  }
  MPoly den = MPoly::constant(n, Rat(1));
  for (const auto& f : fr) den = lcm(den, f.den);
  std::vector<MPoly> nums;
  for (const auto& f : fr) nums.push_back(f.num * (den / f.den));
  return RegularMap::make(den, std::move(nums));
}

/// `(e1, ..., en)` with each ei a Laurent polynomial in t.
inline RationalPath parse_path(std::string_view text) {
  detail::Parser p(text, detail::VarMode::Path);
  p.expect(detail::Tok::LParen, "'(' opening the path");
  std::vector<detail::ExprPtr> comps{p.parse_expr()};
  while (p.at(detail::Tok::Comma)) {
    p.take();
    comps.push_back(p.parse_expr());
  }
  p.expect(detail::Tok::RParen, "')' closing the path");
  if (!p.at(detail::Tok::End)) p.fail(p.peek(), "unexpected '" + p.peek().text + "' after the path");
  std::vector<LaurentPoly> out;
  for (const auto& c : comps) {
    detail::Fraction f = detail::evaluate(*c, 1);
    if (f.den.size() != 1) {
      throw ParseError(c->line, c->col,
                       "denominator " + to_text(f.den) + " is not a monomial: paths must be Laurent polynomials in t");
    }
    const Term& dt = f.den.leading_term();
    LaurentPoly lp;
    for (const auto& t : f.num.terms()) lp.add_term(int(t.exp[0]) - int(dt.exp[0]), t.coeff / dt.coeff);
    out.push_back(std::move(lp));
  }
  return RationalPath(std::move(out));
}

namespace detail {

inline std::optional<Relation> relation_of(const std::string& s) {
  if (s == "<") return Relation::Less;
  if (s == "<=") return Relation::LessEq;
  if (s == "=" || s == "==") return Relation::Equal;
  if (s == ">=") return Relation::GreaterEq;
  if (s == ">") return Relation::Greater;
  return std::nullopt;
}

// Atoms are collected as expression pairs and turned into polynomials once
// the arity is known.
struct PendingAtom {
  ExprPtr lhs, rhs;
  Relation rel;
};
struct PendingNode {
  SetNode::Kind kind;
  std::vector<PendingAtom> atoms;     // for chained comparisons: conjunction
  std::vector<PendingNode> children;  // for And / Or
};

class SetParser {
 public:
  explicit SetParser(Parser& p) : p_(p) {}

  PendingNode parse_or() {
    std::vector<PendingNode> parts{parse_and()};
    while (p_.at_ident("or")) {
      p_.take();
      parts.push_back(parse_and());
    }
    if (parts.size() == 1) return std::move(parts[0]);
    return PendingNode{SetNode::Kind::Or, {}, std::move(parts)};
  }

 private:
  PendingNode parse_and() {
    std::vector<PendingNode> parts{parse_factor()};
    while (p_.at_ident("and")) {
      p_.take();
      parts.push_back(parse_factor());
    }
    if (parts.size() == 1) return std::move(parts[0]);
    return PendingNode{SetNode::Kind::And, {}, std::move(parts)};
  }

  PendingNode parse_factor() {
    const std::size_t start = p_.position();
    if (p_.at(Tok::LParen)) {
      // Either a parenthesized formula or an atom whose left side starts with '('.
      try {
        return parse_atom();
      } catch (const ParseError&) {
        p_.rewind(start);
      }
      p_.take();
      PendingNode inner = parse_or();
      p_.expect(Tok::RParen, "')'");
      return inner;
    }
    return parse_atom();
  }

  PendingNode parse_atom() {
    ExprPtr lhs = p_.parse_expr();
    if (!p_.at(Tok::Rel)) p_.fail(p_.peek(), "expected a comparison (<, <=, =, >=, >)");
    PendingNode out{SetNode::Kind::Atom, {}, {}};
    while (p_.at(Tok::Rel)) {
      Token r = p_.take();
      auto rel = relation_of(r.text);
      if (!rel) p_.fail(r, "unknown relation '" + r.text + "'");
      ExprPtr rhs = p_.parse_expr();
      out.atoms.push_back(PendingAtom{lhs, rhs, *rel});
      lhs = rhs;
    }
    return out;
  }

  Parser& p_;
};

inline SetNode build_set(const PendingNode& node, std::size_t n) {
  if (node.kind == SetNode::Kind::Atom) {
    std::vector<SetNode> atoms;
    for (const auto& a : node.atoms) {
      Fraction l = evaluate(*a.lhs, n), r = evaluate(*a.rhs, n);
      if (!l.den.is_constant() || !r.den.is_constant()) {
        throw ParseError(a.lhs->line, a.lhs->col, "set atoms must be polynomial (no variable denominators)");
      }
      MPoly diff = (1 / l.den.constant_value()) * l.num - (1 / r.den.constant_value()) * r.num;
      atoms.push_back(SetNode::atom(std::move(diff), a.rel));
    }
    return SetNode::join(SetNode::Kind::And, std::move(atoms));
  }
  std::vector<SetNode> kids;
  for (const auto& c : node.children) kids.push_back(build_set(c, n));
  return SetNode::join(node.kind, std::move(kids));
}

}  // namespace detail

/// `[set R^n :] formula` with atoms `e REL e [REL e ...]`, `and`, `or`, parentheses.
inline SemialgebraicSet parse_set(std::string_view text) {
  detail::Parser p(text, detail::VarMode::Affine);
  std::optional<int> n_decl;
  detail::Token head = p.peek();
  if (p.at_ident("set")) {
    p.take();
    n_decl = p.parse_space();
    p.expect(detail::Tok::Colon, "':'");
  }
  detail::SetParser sp(p);
  detail::PendingNode tree = sp.parse_or();
  if (!p.at(detail::Tok::End)) p.fail(p.peek(), "unexpected '" + p.peek().text + "' after the formula");
  std::size_t n = std::max<std::size_t>(1, p.max_var());
  if (n_decl) {
    if (*n_decl < 1 || *n_decl >= static_cast<int>(kMaxVars)) p.fail(head, "ambient dimension out of range");
    if (static_cast<std::size_t>(*n_decl) < p.max_var()) p.fail(head, "set uses more variables than R^" + std::to_string(*n_decl));
    n = static_cast<std::size_t>(*n_decl);
  }
  return SemialgebraicSet(n, detail::build_set(tree, n));
}

/// A bare polynomial in `nvars` variables, e.g. homogeneous forms in x0..xn.
inline MPoly parse_polynomial(std::string_view text, std::size_t nvars, VarStyle style = VarStyle::Affine) {
  if (style == VarStyle::Homogeneous) {
    // x0..xn name slots 0..n: shift every indexed name up by one and reuse the
    // affine reader, whose x1 is slot 0.
    std::string src(text), renamed;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 'x' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])) &&
          (i == 0 || !std::isalnum(static_cast<unsigned char>(src[i - 1])))) {
        std::size_t j = i + 1;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        renamed += "x" + std::to_string(std::stoi(src.substr(i + 1, j - i - 1)) + 1);
        i = j - 1;
      } else {
        renamed += src[i];
      }
    }
    return parse_polynomial(renamed, nvars, VarStyle::Affine);
  }
  detail::Parser p(text, detail::VarMode::Affine);
  detail::ExprPtr e = p.parse_expr();
  if (!p.at(detail::Tok::End)) p.fail(p.peek(), "unexpected '" + p.peek().text + "'");
  if (p.max_var() > nvars) throw ParseError(1, 1, "polynomial uses more than " + std::to_string(nvars) + " variables");
  detail::Fraction f = detail::evaluate(*e, nvars);
  if (!f.den.is_constant()) throw ParseError(e->line, e->col, "expected a polynomial, found a fraction");
  return (1 / f.den.constant_value()) * f.num;
}

}  // namespace sinfty
