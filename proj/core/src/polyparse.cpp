#include "ellsurf/polyparse.hpp"

#include <cctype>

#include "ellsurf/errors.hpp"

namespace ellsurf {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::vector<ExprToken> lex(std::string_view text, bool allow_bare_slash) {
  std::vector<ExprToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < text.size() && is_digit(text[i])) ++i;
      if (i < text.size() && text[i] == '/' && i + 1 < text.size() && is_digit(text[i + 1])) {
        ++i;
        while (i < text.size() && is_digit(text[i])) ++i;
        out.push_back({TokenKind::SlashRational, std::string(text.substr(start, i - start)), start});
      } else {
        out.push_back({TokenKind::Integer, std::string(text.substr(start, i - start)), start});
      }
    } else if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      out.push_back({TokenKind::Variable, std::string(text.substr(start, i - start)), start});
    } else if (c == '+' || c == '-' || c == '*' || c == '^') {
      out.push_back({TokenKind::Operator, std::string(1, c), i++});
    } else if (c == '/' && allow_bare_slash) {
      out.push_back({TokenKind::Operator, "/", i++});
    } else if (c == '/') {
      throw ParseError("'/' is only allowed inside a rational literal such as 3/5", i);
    } else if (c == '(') {
      out.push_back({TokenKind::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({TokenKind::RParen, ")", i++});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::vector<ExprToken> toks, std::size_t end, std::string var)
      : toks_(std::move(toks)), end_(end), var_(std::move(var)) {}

  Poly expr() {
    bool neg = false;
    if (is_op("-")) {
      neg = true;
      ++i_;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    while (is_op("+") || is_op("-")) {
      const bool minus = toks_[i_].lexeme == "-";
      ++i_;
      if (is_op("-") || is_op("+")) throw ParseError("unary sign is only allowed at the start of an expression", pos());
      Poly t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  bool at_end() const { return i_ >= toks_.size(); }
  bool is_op(const char* op) const {
    return !at_end() && toks_[i_].kind == TokenKind::Operator && toks_[i_].lexeme == op;
  }
  bool is_kind(TokenKind k) const { return !at_end() && toks_[i_].kind == k; }
  std::size_t pos() const { return at_end() ? end_ : toks_[i_].position; }
  void advance() { ++i_; }

  void expect_end() {
    if (at_end()) return;
    const ExprToken& t = toks_[i_];
    if (t.kind == TokenKind::RParen) throw ParseError("unbalanced ')'", t.position);
    if (t.kind == TokenKind::Operator && t.lexeme == "^") throw ParseError("unexpected '^'", t.position);
    throw ParseError("unexpected '" + t.lexeme + "' (implicit multiplication is not supported, use '*')",
                     t.position);
  }

  void expect_rparen() {
    if (!is_kind(TokenKind::RParen)) throw ParseError("expected ')'", pos());
    ++i_;
  }

 private:
  Poly term() {
    Poly acc = factor();
    while (is_op("*")) {
      ++i_;
      acc *= factor();
    }
    // A base directly after a factor is an attempted implicit product.
    if (is_kind(TokenKind::Integer) || is_kind(TokenKind::SlashRational) || is_kind(TokenKind::Variable) ||
        is_kind(TokenKind::LParen))
      throw ParseError("implicit multiplication is not supported, use '*'", pos());
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (!is_op("^")) return b;
    ++i_;
    if (is_op("-")) throw ParseError("negative exponent", pos());
    if (is_kind(TokenKind::SlashRational)) throw ParseError("fractional exponent", pos());
    if (!is_kind(TokenKind::Integer)) throw ParseError("exponent must be a non-negative integer", pos());
    const ExprToken& e = toks_[i_];
    if (e.lexeme.size() > 6 || std::stol(e.lexeme) > kMaxExponent)
      throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), e.position);
    const long k = std::stol(e.lexeme);
    ++i_;
    if (is_op("^")) throw ParseError("chained '^' is ambiguous, add parentheses", pos());
    return b.pow(static_cast<unsigned>(k));
  }

  Poly base() {
    if (at_end()) throw ParseError("unexpected end of input", end_);
    const ExprToken& t = toks_[i_];
    switch (t.kind) {
      case TokenKind::Integer:
      case TokenKind::SlashRational: {
        const auto slash = t.lexeme.find('/');
        if (slash != std::string::npos && mpz_class(t.lexeme.substr(slash + 1)) == 0)
          throw ParseError("zero denominator", t.position + slash + 1);
        ++i_;
        return Poly::constant(Rat::parse(t.lexeme), var_);
      }
      case TokenKind::Variable:
        if (t.lexeme != var_)
          throw ParseError("unknown variable '" + t.lexeme + "' (expected '" + var_ + "')", t.position);
        ++i_;
        return Poly::identity(var_);
      case TokenKind::LParen: {
        ++i_;
        Poly inner = expr();
        expect_rparen();
        return inner;
      }
      case TokenKind::RParen:
        throw ParseError("unexpected ')'", t.position);
      case TokenKind::Operator:
        if (t.lexeme == "-" || t.lexeme == "+")
          throw ParseError("unary sign is only allowed at the start of an expression", t.position);
        throw ParseError("unexpected '" + t.lexeme + "'", t.position);
    }
    throw ParseError("unexpected token", t.position);
  }

  std::vector<ExprToken> toks_;
  std::size_t i_ = 0;
  std::size_t end_;
  std::string var_;
};

}  // namespace

std::vector<ExprToken> tokenize(std::string_view text) { return lex(text, false); }

Poly parse_poly(std::string_view text, const std::string& var) {
  Parser p(tokenize(text), text.size(), var);
  Poly out = p.expr();
  p.expect_end();
  return out.with_var(var);
}

RatFn parse_ratfn(std::string_view text, const std::string& var) {
  auto toks = lex(text, true);
  // A bare '/' may only separate two parenthesized groups.
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (toks[k].kind != TokenKind::Operator || toks[k].lexeme != "/") continue;
    if (k == 0 || toks[k - 1].kind != TokenKind::RParen || k + 1 >= toks.size() ||
        toks[k + 1].kind != TokenKind::LParen)
      throw ParseError("division must have the form (numerator)/(denominator)", toks[k].position);
  }
  Parser p(std::move(toks), text.size(), var);
  Poly num = p.expr();
  if (p.is_op("/")) {
    p.advance();
    if (!p.is_kind(TokenKind::LParen)) throw ParseError("expected '('", p.pos());
    const std::size_t at = p.pos();
    p.advance();
    Poly den = p.expr();
    p.expect_rparen();
    p.expect_end();
    if (den.is_zero()) throw ParseError("zero denominator", at);
    return RatFn(num.with_var(var), den.with_var(var));
  }
  p.expect_end();
  return RatFn(num.with_var(var));
}

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rat& c = p.coeff(i);
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (c.sign() < 0)
      out += first ? "-" : " - ";
    else if (!first)
      out += " + ";
    const Rat a = c.abs();
    std::string mono;
    if (i == 1)
      mono = p.var();
    else if (i > 1)
      mono = p.var() + "^" + std::to_string(i);
    if (mono.empty())
      out += a.str();
    else if (a.is_one())
      out += mono;
    else
      out += a.str() + "*" + mono;
  }
  return out;
}

std::string render_ratfn(const RatFn& r) {
  if (r.is_polynomial()) return render_poly(r.num());
  return "(" + render_poly(r.num()) + ")/(" + render_poly(r.den()) + ")";
}

}  // namespace ellsurf
