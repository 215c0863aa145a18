#pragma once

// Text front end for noncommutative q-expressions.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-' | '+') factor | atom ['^' signed-int]
//   atom   := int ['/' int] | 'i' | 'q' ['^' signed-int | '^' '(' signed-int ['/' '2'] ')']
//           | identifier | '(' expr ')'
//
// Multiplication is always explicit; products keep their written order.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlorentz/ncalg.hpp"

namespace qlorentz {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  int line = 1;
  int column = 1;
};

/// Syntax error or unknown symbol, positioned at `span`.
class ExprError : public std::invalid_argument {
 public:
  ExprError(const std::string& what, Span span);
  const Span& span() const { return span_; }

 private:
  Span span_;
};

struct ExprNode {
  enum class Kind { Scalar, QPower, Symbol, Sum, Product, Power, Negate, Group };

  Kind kind = Kind::Scalar;
  Span span;
  GaussRational scalar;  // Scalar
  int s_exponent = 0;    // QPower, in units of q^{1/2}
  std::string name;      // Symbol
  int exponent = 0;      // Power
  std::vector<ExprNode> children;
};

ExprNode parse_expr(std::string_view text);

/// Lowers to a normal-ordered polynomial in `alg`. Throws ExprError for an
/// unknown generator or a negative power of a non-monomial.
NCPoly lower(const ExprNode& node, const AlgebraPtr& alg);

/// parse_expr followed by lower.
NCPoly parse_poly(std::string_view text, const AlgebraPtr& alg);

/// Canonical text; parse_poly(print_canonical(p), alg) == p.
std::string print_canonical(const NCPoly& p);

/// Prefix rendering of the tree, e.g. "(+ (* q^(1/2) a b) (- (* b a)))".
std::string to_sexpr(const ExprNode& node);

}  // namespace qlorentz
