#include "doe/expression.hpp"

#include <cctype>

#include "doe/errors.hpp"

namespace doe {

namespace {

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : text_(text), options_(options) {}

  Expr parse() {
    skip_space();
    if (at_end()) throw SyntaxError("empty expression", pos_);
    Expr e = expr();
    skip_space();
    if (!at_end()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static Expr binary(ExprNode::Kind kind, Expr lhs, Expr rhs, std::size_t pos) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    n->position = pos;
    return n;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') return lhs;
      std::size_t at = pos_++;
      Expr rhs = term();
      lhs = binary(c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, lhs, rhs, at);
    }
  }

  bool starts_atom() {
    skip_space();
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        std::size_t at = pos_++;
        lhs = binary(ExprNode::Kind::Mul, lhs, factor(), at);
      } else if (options_.juxtaposition && starts_atom()) {
        std::size_t at = pos_;
        lhs = binary(ExprNode::Kind::Mul, lhs, factor(), at);
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    skip_space();
    if (peek() == '-') {
      std::size_t at = pos_++;
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Neg;
      n->lhs = factor();
      n->position = at;
      return n;
    }
    Expr base = atom();
    skip_space();
    if (peek() != '^') return base;
    std::size_t at = pos_++;
    skip_space();
    mpz_class e = integer("exponent");
    if (e > 1000000) throw SyntaxError("exponent too large", at);
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Pow;
    n->lhs = base;
    n->exponent = static_cast<unsigned>(e.get_ui());
    n->position = at;
    return n;
  }

  mpz_class integer(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(std::string("expected ") + what, start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Expr atom() {
    skip_space();
    std::size_t start = pos_;
    char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      skip_space();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    auto n = std::make_shared<ExprNode>();
    n->position = start;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      n->kind = ExprNode::Kind::Number;
      n->num = integer("integer");
      std::size_t save = pos_;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        n->den = integer("denominator");
      } else {
        pos_ = save;
      }
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                           text_[pos_] == '_')) {
        ++pos_;
      }
      n->kind = ExprNode::Kind::Name;
      n->name = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    if (at_end()) throw SyntaxError("unexpected end of input", pos_);
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

struct PolynomialOps {
  const ContextPtr& ctx;

  Polynomial number(const mpz_class& num, const mpz_class& den, std::size_t) {
    return Polynomial(ctx, FieldElement(ctx->field(), num, den));
  }
  Polynomial name(const std::string& n, std::size_t) { return Polynomial::generator(ctx, n); }
  Polynomial add(Polynomial a, const Polynomial& b) { return a += b; }
  Polynomial sub(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
  Polynomial neg(const Polynomial& a) { return -a; }
  Polynomial pow(const Polynomial& a, unsigned e) { return a.pow(e); }
};

}  // namespace

Expr parse_expression(std::string_view text, ParseOptions options) {
  return Parser(text, options).parse();
}

Polynomial parse_poly(std::string_view text, const ContextPtr& ctx) {
  Expr e = parse_expression(text);
  PolynomialOps ops{ctx};
  return evaluate(*e, ops);
}

FieldElement parse_scalar(std::string_view text, const FieldSpec& field) {
  auto ctx = make_context(field, {});
  Polynomial p = parse_poly(text, ctx);
  return p.constant_term();
}

}  // namespace doe
