#include <gtest/gtest.h>

#include "qlorentz/algebras.hpp"
#include "qlorentz/expr.hpp"
#include "random_poly.hpp"

using namespace qlorentz;

namespace {

const Laurent q = Laurent::q();

AlgebraPtr slq() { return named_algebra("slq2"); }
NCPoly g(std::string_view n) { return NCPoly::generator(slq(), n); }

}  // namespace

TEST(Parse, OrderedProducts) {
  auto ast = parse_expr("q^(1/2)*a*b - b*a");
  EXPECT_EQ(to_sexpr(ast), "(+ (* q^(1/2) a b) (- (* b a)))");
  EXPECT_EQ(ast.span.begin, 0u);
  EXPECT_EQ(ast.span.end, 17u);
  EXPECT_EQ(ast.children[1].span.column, 13);
}

TEST(Parse, Atoms) {
  EXPECT_EQ(to_sexpr(parse_expr("q")), "q");
  EXPECT_EQ(to_sexpr(parse_expr("q^-1")), "q^-1");
  EXPECT_EQ(to_sexpr(parse_expr("q^(-3/2)")), "q^(-3/2)");
  EXPECT_EQ(to_sexpr(parse_expr("q^(2)")), "q^2");
  EXPECT_EQ(to_sexpr(parse_expr("-2/4")), "(- 1/2)");
  EXPECT_EQ(to_sexpr(parse_expr("i")), "i");
  EXPECT_EQ(to_sexpr(parse_expr("(a + b)^3")), "(^ (+ a b) 3)");
  EXPECT_EQ(to_sexpr(parse_expr("a*-b")), "(* a (- b))");
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  auto err = [](std::string_view text) -> Span {
    try {
      parse_expr(text);
    } catch (const ExprError& e) {
      return e.span();
    }
    ADD_FAILURE() << "no error for " << text;
    return {};
  };
  EXPECT_EQ(err("a b").column, 3);  // juxtaposition
  EXPECT_EQ(err("a +").column, 4);
  Span s = err("a*b\n  + (c");
  EXPECT_EQ(s.line, 2);
  EXPECT_EQ(s.column, 7);
  EXPECT_EQ(err("q^(1/3)").column, 6);
  EXPECT_EQ(err("1/0").column, 1);
  EXPECT_EQ(err("a $ b").column, 3);
  EXPECT_EQ(err("a^").column, 3);
  EXPECT_EQ(err("").column, 1);
  EXPECT_THROW(parse_expr("q^(1/2"), ExprError);
  EXPECT_THROW(parse_expr("a)"), ExprError);
}

TEST(Parse, MessageHasLineAndColumn) {
  try {
    parse_expr("a *\n*b");
    FAIL();
  } catch (const ExprError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("2:1: ", 0), 0u) << e.what();
  }
}

TEST(Lower, ReordersDa) {
  EXPECT_EQ(parse_poly("d*a", slq()), g("a") * g("d") - (q - Laurent::q_pow(-1)) * g("b") * g("c"));
  EXPECT_EQ(print_canonical(parse_poly("d*a", slq())), "a*d - (q - q^-1)*b*c");
}

TEST(Lower, QuantumDeterminant) {
  NCPoly det = parse_poly("(a*d - q*b*c)", slq());
  EXPECT_EQ(det, g("a") * g("d") - q * g("b") * g("c"));
  EXPECT_EQ(print_canonical(det), "a*d - q*b*c");
  EXPECT_EQ(print_canonical(NCPoly(slq())), "0");
}

TEST(Lower, Scalars) {
  EXPECT_EQ(parse_poly("q^(1/2)*q^(1/2)", slq()), NCPoly(slq(), q));
  EXPECT_EQ(parse_poly("(2*q)^-2", slq()), NCPoly(slq(), Laurent(mpq_class(1, 4)) * Laurent::q_pow(-2)));
  EXPECT_EQ(parse_poly("i*i", slq()), NCPoly(slq(), -1));
}

TEST(Lower, Errors) {
  EXPECT_THROW(parse_poly("a*x1", slq()), ExprError);
  try {
    parse_poly("a + abar", slq());
    FAIL();
  } catch (const ExprError& e) {
    EXPECT_EQ(e.span().column, 5);
  }
  EXPECT_THROW(parse_poly("a^-1", slq()), ExprError);
  EXPECT_THROW(parse_poly("(1 + q)^-1", slq()), ExprError);
  EXPECT_NO_THROW(parse_poly("abar*dbar", named_algebra("slq2bar")));
}

TEST(RoundTrip, RandomPolynomials) {
  std::mt19937_64 rng(20261016);
  auto alg = slq();
  for (int k = 0; k < 500; ++k) {
    NCPoly p = randgen::random_poly(alg, {"a", "b", "c"}, 3, rng);
    std::string text = print_canonical(p);
    EXPECT_EQ(parse_poly(text, alg), p) << text;
    EXPECT_EQ(print_canonical(parse_poly(text, alg)), text);
  }
}

TEST(RoundTrip, OtherAlgebras) {
  std::mt19937_64 rng(7);
  for (auto [name, gens] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"slq2bar", {"a", "dbar", "cbar"}}, {"repr", {"x1", "x2", "c1"}}, {"spinor", {"a", "x1", "c2"}}}) {
    auto alg = named_algebra(name);
    for (int k = 0; k < 100; ++k) {
      NCPoly p = randgen::random_poly(alg, gens, 3, rng);
      EXPECT_EQ(parse_poly(print_canonical(p), alg), p) << name;
    }
  }
}
