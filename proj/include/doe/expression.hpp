#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "doe/polynomial.hpp"

namespace doe {

/// Parsed arithmetic expression over named atoms. The same tree evaluates
/// into the commutative base algebra or, with a noncommutative product,
/// into a double extension.
struct ExprNode {
  enum class Kind { Add, Sub, Mul, Neg, Pow, Name, Number };

  Kind kind;
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
  std::string name;
  mpz_class num = 0;
  mpz_class den = 1;
  unsigned exponent = 0;
  std::size_t position = 0;
};

using Expr = std::shared_ptr<const ExprNode>;

struct ParseOptions {
  /// Accept "y2 y1 x" as a product (word notation).
  bool juxtaposition = false;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' nat)?
///   atom   := name | integer | integer '/' integer | '(' expr ')'
/// Throws SyntaxError with the offending offset.
Expr parse_expression(std::string_view text, ParseOptions options = {});

/// Folds an expression tree. `Ops` supplies number(num, den, pos),
/// name(str, pos), add, sub, mul, neg and pow(value, exponent).
template <class Ops>
auto evaluate(const ExprNode& node, Ops& ops) -> decltype(ops.neg(ops.number(node.num, node.den, 0))) {
  switch (node.kind) {
    case ExprNode::Kind::Add:
      return ops.add(evaluate(*node.lhs, ops), evaluate(*node.rhs, ops));
    case ExprNode::Kind::Sub:
      return ops.sub(evaluate(*node.lhs, ops), evaluate(*node.rhs, ops));
    case ExprNode::Kind::Mul:
      return ops.mul(evaluate(*node.lhs, ops), evaluate(*node.rhs, ops));
    case ExprNode::Kind::Neg:
      return ops.neg(evaluate(*node.lhs, ops));
    case ExprNode::Kind::Pow:
      return ops.pow(evaluate(*node.lhs, ops), node.exponent);
    case ExprNode::Kind::Name:
      return ops.name(node.name, node.position);
    case ExprNode::Kind::Number:
      break;
  }
  return ops.number(node.num, node.den, node.position);
}

/// Parses a polynomial in the generators of `ctx`. Throws SyntaxError,
/// UnknownGenerator, or DivisorNotInvertible.
Polynomial parse_poly(std::string_view text, const ContextPtr& ctx);

/// Parses a field constant such as "-1" or "1/2"; must be degree zero.
FieldElement parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace doe
