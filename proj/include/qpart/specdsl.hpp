// A small declarative language for identity files (".qid").  An identity is
// a named list of expressions separated by '='; expressions are built from
// integer constants, powers of q, Pochhammer factors, sums over a bound
// variable, and weighted enumeration sides.  Exponents are polynomials of
// degree at most two in the innermost sum variable; rational constants are
// accepted only when the whole exponent is provably integral, which is
// checked at parse time over a full residue cycle of the denominator.
//
// Grammar:
//   file     := identity* ;
//   identity := "identity" NAME ["@" INT] "{" expr ("=" expr)+ "}" ;
//   expr     := term (("+"|"-") term)* ;
//   term     := factor (("*"|"/") factor)* ;
//   factor   := INT | "q" "^" "(" poly ")" | "q" | "(" expr ")"
//             | "poch" "(" ("+"|"-") "," poly "," INT "," (poly|"inf") ")"
//             | "sum" "(" VAR "," INT "," expr ")"
//             | "weighted" "(" SETNAME "," WEIGHTNAME ")" ;
//   poly     := integer polynomial in the innermost bound VAR; operators
//               + - * / ^ and parentheses; '/' only by integer constants.
// '#' starts a comment running to end of line.

#pragma once

#include <cctype>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/errors.hpp"
#include "qpart/identities.hpp"
#include "qpart/partitions.hpp"
#include "qpart/qseries.hpp"
#include "qpart/weights.hpp"

namespace qpart {
namespace dsl {

// ---------------------------------------------------------------------------
// Exponent polynomials: c2*v^2 + c1*v + c0 with exact rational coefficients.

struct QuadPoly {
  std::string var;  // empty when constant
  mpq_class c2 = 0, c1 = 0, c0 = 0;

  bool is_constant() const { return c2 == 0 && c1 == 0; }

  mpq_class at(long v) const {
    mpq_class x(v);
    return c2 * x * x + c1 * x + c0;
  }

  bool operator==(const QuadPoly& o) const {
    return var == o.var && c2 == o.c2 && c1 == o.c1 && c0 == o.c0;
  }
};

// Integer-valuedness over a full residue cycle of the coefficient
// denominators; a pure coefficient check would wrongly reject exponents
// like (3*j^2+j)/2 that are integral at every integer argument.
inline bool provably_integral(const QuadPoly& p) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), p.c2.get_den().get_mpz_t(), p.c1.get_den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.c0.get_den().get_mpz_t());
  if (l == 1) return true;
  if (!l.fits_slong_p() || l.get_si() > (1L << 20)) return false;
  const long cycle = l.get_si();
  for (long v = 0; v < cycle; ++v)
    if (p.at(v).get_den() != 1) return false;
  return true;
}

inline std::string to_string(const QuadPoly& p) {
  const auto coef = [](const mpq_class& c) { return c.get_str(); };
  std::string out;
  const auto push = [&](const mpq_class& c, const std::string& power) {
    if (c == 0) return;
    mpq_class a = c;
    if (out.empty()) {
      if (a < 0) {
        out = "0 - ";  // the grammar has no unary minus
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (power.empty())
      out += coef(a);
    else if (a == 1)
      out += power;
    else
      out += coef(a) + "*" + power;
  };
  push(p.c2, p.var + "^2");
  push(p.c1, p.var);
  push(p.c0, "");
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Abstract syntax.

enum class AstKind { Int, QPow, Poch, Add, Sub, Mul, Div, Sum, Weighted };

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
  AstKind kind;

  long int_value = 0;  // Int

  QuadPoly poly;  // QPow

  int sign = 1;          // Poch: the +/- in (1 +/- sign*q^...)
  QuadPoly offset;       // Poch
  long step = 1;         // Poch
  bool infinite = false; // Poch
  QuadPoly length;       // Poch, when finite

  std::string var;  // Sum
  long lower = 0;   // Sum

  std::string set_name, weight_name;  // Weighted

  AstPtr lhs, rhs;  // Add/Sub/Mul/Div
  AstPtr body;      // Sum
};

inline bool ast_equal(const Ast& a, const Ast& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AstKind::Int:
      return a.int_value == b.int_value;
    case AstKind::QPow:
      return a.poly == b.poly;
    case AstKind::Poch:
      return a.sign == b.sign && a.offset == b.offset && a.step == b.step &&
             a.infinite == b.infinite && (a.infinite || a.length == b.length);
    case AstKind::Add:
    case AstKind::Sub:
    case AstKind::Mul:
    case AstKind::Div:
      return ast_equal(*a.lhs, *b.lhs) && ast_equal(*a.rhs, *b.rhs);
    case AstKind::Sum:
      return a.var == b.var && a.lower == b.lower && ast_equal(*a.body, *b.body);
    case AstKind::Weighted:
      return a.set_name == b.set_name && a.weight_name == b.weight_name;
  }
  return false;
}

inline bool contains_weighted(const Ast& a) {
  switch (a.kind) {
    case AstKind::Weighted:
      return true;
    case AstKind::Add:
    case AstKind::Sub:
    case AstKind::Mul:
    case AstKind::Div:
      return contains_weighted(*a.lhs) || contains_weighted(*a.rhs);
    case AstKind::Sum:
      return contains_weighted(*a.body);
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Pretty printer.  Canonical text reparses to an identical tree: parentheses
// are emitted exactly where left-associative parsing would lose the shape.

namespace detail {

inline int precedence(AstKind k) {
  switch (k) {
    case AstKind::Add:
    case AstKind::Sub:
      return 1;
    case AstKind::Mul:
    case AstKind::Div:
      return 2;
    default:
      return 3;
  }
}

inline void print_expr(const Ast& a, std::ostream& os, int parent_prec,
                       bool right_operand) {
  const int prec = precedence(a.kind);
  const bool parens =
      prec < parent_prec || (prec == parent_prec && right_operand && prec < 3);
  if (parens) os << "(";
  switch (a.kind) {
    case AstKind::Int:
      os << a.int_value;
      break;
    case AstKind::QPow:
      if (a.poly.is_constant() && a.poly.c0 == 1)
        os << "q";
      else
        os << "q^(" << to_string(a.poly) << ")";
      break;
    case AstKind::Poch:
      os << "poch(" << (a.sign < 0 ? "-" : "+") << "," << to_string(a.offset)
         << "," << a.step << ",";
      if (a.infinite)
        os << "inf";
      else
        os << to_string(a.length);
      os << ")";
      break;
    case AstKind::Add:
    case AstKind::Sub:
      print_expr(*a.lhs, os, prec, false);
      os << (a.kind == AstKind::Add ? " + " : " - ");
      print_expr(*a.rhs, os, prec, true);
      break;
    case AstKind::Mul:
    case AstKind::Div:
      print_expr(*a.lhs, os, prec, false);
      os << (a.kind == AstKind::Mul ? " * " : " / ");
      print_expr(*a.rhs, os, prec, true);
      break;
    case AstKind::Sum:
      os << "sum(" << a.var << ", " << a.lower << ", ";
      print_expr(*a.body, os, 0, false);
      os << ")";
      break;
    case AstKind::Weighted:
      os << "weighted(" << a.set_name << ", " << a.weight_name << ")";
      break;
  }
  if (parens) os << ")";
}

}  // namespace detail

inline std::string pretty_print(const Ast& a) {
  std::ostringstream os;
  detail::print_expr(a, os, 0, false);
  return os.str();
}

// ---------------------------------------------------------------------------
// Identity files.

struct ParsedIdentity {
  std::string name;
  std::optional<int> order;
  std::vector<AstPtr> sides;
};

struct IdentityFile {
  std::vector<ParsedIdentity> identities;
};

inline std::string pretty_print(const IdentityFile& file) {
  std::ostringstream os;
  for (const auto& id : file.identities) {
    os << "identity " << id.name;
    if (id.order) os << " @" << *id.order;
    os << " {\n";
    for (size_t s = 0; s < id.sides.size(); ++s)
      os << (s == 0 ? "  " : "  = ") << pretty_print(*id.sides[s]) << "\n";
    os << "}\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Lexer.

namespace detail {

enum class Tok {
  Ident, Int, LBrace, RBrace, LParen, RParen, At, Comma, Assign,
  Plus, Minus, Star, Slash, Caret, End
};

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  int line = 1;
  int col = 1;
};

inline const char* token_name(Tok k) {
  switch (k) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::At: return "'@'";
    case Tok::Comma: return "','";
    case Tok::Assign: return "'='";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  const auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') bump(text[i]);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(c);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        digits += text[i];
        bump(text[i]);
      }
      t.kind = Tok::Int;
      t.text = digits;
      try {
        t.value = std::stol(digits);
      } catch (const std::out_of_range&) {
        throw ParseError(t.line, t.col, "integer literal too large");
      }
      out.push_back(std::move(t));
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        word += text[i];
        bump(text[i]);
      }
      t.kind = Tok::Ident;
      t.text = std::move(word);
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '@': t.kind = Tok::At; break;
      case ',': t.kind = Tok::Comma; break;
      case '=': t.kind = Tok::Assign; break;
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      default:
        throw ParseError(line, col,
                         std::string("unexpected character '") + c + "'");
    }
    t.text = std::string(1, c);
    bump(c);
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.col = col;
  out.push_back(std::move(end));
  return out;
}

inline bool is_reserved(const std::string& word) {
  return word == "identity" || word == "q" || word == "poch" ||
         word == "sum" || word == "weighted" || word == "inf";
}

// ---------------------------------------------------------------------------
// Parser.

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  IdentityFile parse_file() {
    IdentityFile file;
    while (peek().kind != Tok::End) file.identities.push_back(parse_identity(file));
    return file;
  }

  AstPtr parse_single_expression() {
    AstPtr e = parse_expr();
    if (peek().kind != Tok::End)
      throw err("expected end of input after expression");
    return e;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::vector<std::string> bound_;  // enclosing sum variables, outermost first

  const Token& peek() const { return toks_[pos_]; }
  Token advance() { return toks_[pos_++]; }

  ParseError err(const std::string& msg) const {
    const Token& t = peek();
    return ParseError(t.line, t.col, msg + ", got " +
                                         (t.kind == Tok::Ident || t.kind == Tok::Int
                                              ? "'" + t.text + "'"
                                              : token_name(t.kind)));
  }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw err("expected " + what);
    return advance();
  }

  ParsedIdentity parse_identity(const IdentityFile& so_far) {
    const Token kw = expect(Tok::Ident, "'identity'");
    if (kw.text != "identity")
      throw ParseError(kw.line, kw.col, "expected 'identity', got '" + kw.text + "'");
    const Token name = expect(Tok::Ident, "identity name");
    if (is_reserved(name.text))
      throw ParseError(name.line, name.col,
                       "'" + name.text + "' is reserved and cannot name an identity");
    for (const auto& prev : so_far.identities)
      if (prev.name == name.text)
        throw ParseError(name.line, name.col,
                         "duplicate identity name '" + name.text + "'");
    ParsedIdentity id;
    id.name = name.text;
    if (peek().kind == Tok::At) {
      advance();
      const Token ord = expect(Tok::Int, "truncation order after '@'");
      if (ord.value > 100000)
        throw ParseError(ord.line, ord.col, "truncation order too large");
      id.order = static_cast<int>(ord.value);
    }
    expect(Tok::LBrace, "'{'");
    id.sides.push_back(parse_expr());
    if (peek().kind != Tok::Assign)
      throw err("expected '=' (an identity needs at least two sides)");
    while (peek().kind == Tok::Assign) {
      advance();
      id.sides.push_back(parse_expr());
    }
    expect(Tok::RBrace, "'}'");
    return id;
  }

  AstPtr parse_expr() {
    AstPtr lhs = parse_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Tok op = advance().kind;
      AstPtr rhs = parse_term();
      auto node = std::make_shared<Ast>();
      node->kind = op == Tok::Plus ? AstKind::Add : AstKind::Sub;
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  AstPtr parse_term() {
    AstPtr lhs = parse_factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Tok op = advance().kind;
      AstPtr rhs = parse_factor();
      auto node = std::make_shared<Ast>();
      node->kind = op == Tok::Star ? AstKind::Mul : AstKind::Div;
      node->lhs = std::move(lhs);
      node->rhs = std::move(rhs);
      lhs = std::move(node);
    }
    return lhs;
  }

  AstPtr parse_factor() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      advance();
      auto node = std::make_shared<Ast>();
      node->kind = AstKind::Int;
      node->int_value = t.value;
      return node;
    }
    if (t.kind == Tok::LParen) {
      advance();
      AstPtr inner = parse_expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (t.text == "q") return parse_qpow();
      if (t.text == "poch") return parse_poch();
      if (t.text == "sum") return parse_sum();
      if (t.text == "weighted") return parse_weighted();
    }
    throw err("expected integer, 'q', '(', 'poch', 'sum', or 'weighted'");
  }

  AstPtr parse_qpow() {
    advance();  // q
    auto node = std::make_shared<Ast>();
    node->kind = AstKind::QPow;
    if (peek().kind == Tok::Caret) {
      advance();
      expect(Tok::LParen, "'(' after '^'");
      node->poly = parse_poly_checked("exponent of q");
      expect(Tok::RParen, "')'");
    } else {
      node->poly.c0 = 1;
    }
    return node;
  }

  AstPtr parse_poch() {
    advance();  // poch
    expect(Tok::LParen, "'(' after 'poch'");
    auto node = std::make_shared<Ast>();
    node->kind = AstKind::Poch;
    if (peek().kind == Tok::Plus)
      node->sign = 1;
    else if (peek().kind == Tok::Minus)
      node->sign = -1;
    else
      throw err("expected '+' or '-' as the first poch argument");
    advance();
    expect(Tok::Comma, "','");
    node->offset = parse_poly_checked("poch offset");
    expect(Tok::Comma, "','");
    const Token step = expect(Tok::Int, "integer poch step");
    if (step.value < 1)
      throw ParseError(step.line, step.col, "poch step must be positive");
    node->step = step.value;
    expect(Tok::Comma, "','");
    if (peek().kind == Tok::Ident && peek().text == "inf") {
      advance();
      node->infinite = true;
    } else {
      node->length = parse_poly_checked("poch length");
    }
    expect(Tok::RParen, "')'");
    return node;
  }

  AstPtr parse_sum() {
    advance();  // sum
    expect(Tok::LParen, "'(' after 'sum'");
    const Token var = expect(Tok::Ident, "sum variable");
    if (is_reserved(var.text))
      throw ParseError(var.line, var.col,
                       "'" + var.text + "' is reserved and cannot be a sum variable");
    for (const auto& outer : bound_)
      if (outer == var.text)
        throw ParseError(var.line, var.col,
                         "variable '" + var.text + "' is already bound");
    expect(Tok::Comma, "','");
    const Token lower = expect(Tok::Int, "integer lower bound");
    expect(Tok::Comma, "','");
    auto node = std::make_shared<Ast>();
    node->kind = AstKind::Sum;
    node->var = var.text;
    node->lower = lower.value;
    bound_.push_back(var.text);
    node->body = parse_expr();
    bound_.pop_back();
    expect(Tok::RParen, "')'");
    return node;
  }

  AstPtr parse_weighted() {
    advance();  // weighted
    expect(Tok::LParen, "'(' after 'weighted'");
    const Token set = expect(Tok::Ident, "set name");
    try {
      SetPredicate::by_name(set.text);
    } catch (const std::invalid_argument&) {
      throw ParseError(set.line, set.col, "unknown set '" + set.text + "'");
    }
    expect(Tok::Comma, "','");
    const Token weight = expect(Tok::Ident, "weight name");
    try {
      Weight::by_name(weight.text);
    } catch (const std::invalid_argument&) {
      throw ParseError(weight.line, weight.col,
                       "unknown weight '" + weight.text + "'");
    }
    expect(Tok::RParen, "')'");
    auto node = std::make_shared<Ast>();
    node->kind = AstKind::Weighted;
    node->set_name = set.text;
    node->weight_name = weight.text;
    return node;
  }

  // Polynomial sub-grammar.  The result is kept exact; the integrality of
  // the whole exponent is established once the full polynomial is known.
  QuadPoly parse_poly_checked(const std::string& where) {
    const Token start = peek();
    QuadPoly p = parse_poly_expr();
    if (!provably_integral(p))
      throw ParseError(start.line, start.col,
                       where + " is not provably integral: " + to_string(p));
    return p;
  }

  QuadPoly parse_poly_expr() {
    QuadPoly lhs = parse_poly_term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Tok op = advance().kind;
      const QuadPoly rhs = parse_poly_term();
      lhs = combine_add(lhs, rhs, op == Tok::Minus);
    }
    return lhs;
  }

  QuadPoly parse_poly_term() {
    QuadPoly lhs = parse_poly_pow();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = advance();
      const QuadPoly rhs = parse_poly_pow();
      if (op.kind == Tok::Star) {
        lhs = poly_mul(lhs, rhs, op);
      } else {
        if (!rhs.is_constant())
          throw ParseError(op.line, op.col,
                           "exponent division must be by an integer constant");
        if (rhs.c0 == 0)
          throw ParseError(op.line, op.col, "division by zero in exponent");
        lhs.c2 /= rhs.c0;
        lhs.c1 /= rhs.c0;
        lhs.c0 /= rhs.c0;
      }
    }
    return lhs;
  }

  QuadPoly parse_poly_pow() {
    QuadPoly base = parse_poly_atom();
    if (peek().kind == Tok::Caret) {
      const Token op = advance();
      const Token exp = expect(Tok::Int, "integer exponent after '^'");
      QuadPoly acc;
      acc.c0 = 1;
      for (long k = 0; k < exp.value; ++k) acc = poly_mul(acc, base, op);
      base = acc;
    }
    return normalized(std::move(base));
  }

  QuadPoly parse_poly_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      advance();
      QuadPoly p;
      p.c0 = t.value;
      return p;
    }
    if (t.kind == Tok::LParen) {
      advance();
      QuadPoly p = parse_poly_expr();
      expect(Tok::RParen, "')'");
      return p;
    }
    if (t.kind == Tok::Ident) {
      if (bound_.empty())
        throw ParseError(t.line, t.col, "unbound variable '" + t.text + "'");
      if (t.text != bound_.back()) {
        for (const auto& outer : bound_)
          if (outer == t.text)
            throw ParseError(t.line, t.col,
                             "only the innermost sum variable '" + bound_.back() +
                                 "' may appear in exponents");
        throw ParseError(t.line, t.col, "unbound variable '" + t.text + "'");
      }
      advance();
      QuadPoly p;
      p.var = t.text;
      p.c1 = 1;
      return p;
    }
    throw err("expected integer, variable, or '(' in exponent");
  }

  // Constant results drop their variable tag so that, e.g., "j - j" and "0"
  // parse to identical polynomials.
  static QuadPoly normalized(QuadPoly p) {
    if (p.is_constant()) p.var.clear();
    return p;
  }

  static QuadPoly combine_add(const QuadPoly& a, const QuadPoly& b, bool minus) {
    QuadPoly out = a;
    if (out.var.empty()) out.var = b.var;
    out.c2 += minus ? -b.c2 : b.c2;
    out.c1 += minus ? -b.c1 : b.c1;
    out.c0 += minus ? -b.c0 : b.c0;
    return normalized(std::move(out));
  }

  static QuadPoly poly_mul(const QuadPoly& a, const QuadPoly& b, const Token& at) {
    const mpq_class d3 = a.c2 * b.c1 + a.c1 * b.c2;
    const mpq_class d4 = a.c2 * b.c2;
    if (d3 != 0 || d4 != 0)
      throw ParseError(at.line, at.col, "exponent degree exceeds 2");
    QuadPoly out;
    out.var = a.var.empty() ? b.var : a.var;
    out.c2 = a.c2 * b.c0 + a.c1 * b.c1 + a.c0 * b.c2;
    out.c1 = a.c1 * b.c0 + a.c0 * b.c1;
    out.c0 = a.c0 * b.c0;
    return normalized(std::move(out));
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Entry points.

inline IdentityFile parse(const std::string& text) {
  return detail::Parser(text).parse_file();
}

inline AstPtr parse_expression(const std::string& text) {
  return detail::Parser(text).parse_single_expression();
}

inline IdentityFile load_identity_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

// ---------------------------------------------------------------------------
// Evaluator.  Errors carry a path of enclosing constructs so a divergence or
// division failure inside a nested sum is attributable to its source.

namespace detail {

class Evaluator {
 public:
  explicit Evaluator(int order) : order_(order) {}

  QSeries eval(const Ast& a, const std::string& path) {
    switch (a.kind) {
      case AstKind::Int: {
        QSeries s(order_);
        s.at(0) = BigInt(a.int_value);
        return s;
      }
      case AstKind::QPow: {
        const long e = poly_value(a.poly, path + "/q^");
        if (e < 0)
          throw EvalError(path + "/q^",
                          "negative exponent " + std::to_string(e));
        if (e > order_) return QSeries(order_);
        return monomial(static_cast<int>(e), order_);
      }
      case AstKind::Poch: {
        const std::string here = path + "/poch";
        const long offset = poly_value(a.offset, here);
        std::optional<long> length;
        if (!a.infinite) length = poly_value(a.length, here);
        try {
          return pochhammer(a.sign, offset, a.step, length, order_);
        } catch (const std::invalid_argument& e) {
          throw EvalError(here, e.what());
        }
      }
      case AstKind::Add:
        return add(eval(*a.lhs, path), eval(*a.rhs, path));
      case AstKind::Sub:
        return sub(eval(*a.lhs, path), eval(*a.rhs, path));
      case AstKind::Mul:
        return mul(eval(*a.lhs, path), eval(*a.rhs, path));
      case AstKind::Div: {
        const QSeries num = eval(*a.lhs, path + "/numerator");
        const QSeries den = eval(*a.rhs, path + "/denominator");
        try {
          return mul(num, reciprocal(den));
        } catch (const DomainError& e) {
          throw EvalError(path + "/denominator", e.what());
        }
      }
      case AstKind::Sum: {
        const std::string here = path + "/sum(" + a.var + ")";
        try {
          return sum_of_terms(
              [&](long n) {
                env_.emplace_back(a.var, n);
                QSeries t = eval(*a.body, here);
                env_.pop_back();
                return t;
              },
              order_, a.lower);
        } catch (const DivergenceError& e) {
          throw EvalError(here, e.what());
        }
      }
      case AstKind::Weighted:
        return weighted_series(SetPredicate::by_name(a.set_name),
                               Weight::by_name(a.weight_name), order_);
    }
    throw EvalError(path, "unreachable node kind");
  }

 private:
  long poly_value(const QuadPoly& p, const std::string& path) const {
    long v = 0;
    if (!p.var.empty()) {
      bool found = false;
      for (auto it = env_.rbegin(); it != env_.rend(); ++it)
        if (it->first == p.var) {
          v = it->second;
          found = true;
          break;
        }
      if (!found) throw EvalError(path, "unbound variable '" + p.var + "'");
    }
    const mpq_class value = p.at(v);
    if (value.get_den() != 1)
      throw EvalError(path, "exponent is not an integer at " + p.var + "=" +
                                std::to_string(v));
    const mpz_class num = value.get_num();
    if (!num.fits_slong_p()) throw EvalError(path, "exponent overflow");
    return num.get_si();
  }

  int order_;
  std::vector<std::pair<std::string, long>> env_;
};

}  // namespace detail

inline QSeries evaluate(const Ast& ast, int order) {
  return detail::Evaluator(order).eval(ast, "expr");
}

// ---------------------------------------------------------------------------
// Bridging into the verification engine.  Default truncation order when the
// file does not pin one: 30 for identities with an enumeration side, 80 for
// pure series identities.

inline IdentitySpec to_identity_spec(const ParsedIdentity& id) {
  IdentitySpec spec;
  spec.name = id.name;
  bool any_weighted = false;
  for (const auto& side : id.sides) any_weighted |= contains_weighted(*side);
  spec.default_order = id.order ? *id.order : (any_weighted ? 30 : 80);
  for (const auto& side : id.sides) {
    SideExpr s;
    s.label = pretty_print(*side);
    s.kind = contains_weighted(*side) ? SideKind::Enum : SideKind::Series;
    s.eval = [side](int order) { return evaluate(*side, order); };
    spec.sides.push_back(std::move(s));
  }
  return spec;
}

inline std::vector<IdentitySpec> to_identity_specs(const IdentityFile& file) {
  std::vector<IdentitySpec> out;
  out.reserve(file.identities.size());
  for (const auto& id : file.identities) out.push_back(to_identity_spec(id));
  return out;
}

}  // namespace dsl
}  // namespace qpart
