#include "qlorentz/expr.hpp"

#include <cctype>
#include <climits>

namespace qlorentz {

ExprError::ExprError(const std::string& what, Span span)
    : std::invalid_argument(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + what),
      span_(span) {}

namespace {

ExprNode make_node(ExprNode::Kind kind, Span span) {
  ExprNode n;
  n.kind = kind;
  n.span = span;
  return n;
}

struct Token {
  enum class Kind { Int, Ident, Op, End } kind = Kind::End;
  std::string text;
  Span span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.span = here();
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char ch = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        t.kind = Token::Kind::Int;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        t.kind = Token::Kind::Ident;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          advance();
      } else if (std::string_view("+-*/^()").find(ch) != std::string_view::npos) {
        t.kind = Token::Kind::Op;
        advance();
      } else {
        t.span.end = t.span.begin + 1;
        throw ExprError(std::string("unexpected character '") + ch + "'", t.span);
      }
      t.span.end = pos_;
      t.text = std::string(src_.substr(t.span.begin, pos_ - t.span.begin));
      out.push_back(std::move(t));
    }
  }

 private:
  Span here() const { return {pos_, pos_, line_, col_}; }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprNode parse() {
    ExprNode e = expr();
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::Op && peek().text[0] == c; }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExprError(peek().kind == Token::Kind::End ? msg + " at end of input" : msg, peek().span);
  }
  void expect(char c) {
    if (!at_op(c)) fail(std::string("expected '") + c + "'");
    take();
  }
  static Span join(const Span& a, const Span& b) { return {a.begin, b.end, a.line, a.column}; }

  long integer() {
    if (peek().kind != Token::Kind::Int) fail("expected integer");
    Token t = take();
    if (t.text.size() > 9) throw ExprError("integer too large", t.span);
    return std::stol(t.text);
  }
  long signed_integer() {
    bool neg = false;
    if (at_op('-') || at_op('+')) neg = take().text[0] == '-';
    long v = integer();
    return neg ? -v : v;
  }

  ExprNode expr() {
    ExprNode first = term();
    if (!at_op('+') && !at_op('-')) return first;
    ExprNode sum = make_node(ExprNode::Kind::Sum, first.span);
    sum.children.push_back(std::move(first));
    while (at_op('+') || at_op('-')) {
      Token op = take();
      ExprNode t = term();
      if (op.text[0] == '-') {
        ExprNode neg = make_node(ExprNode::Kind::Negate, join(op.span, t.span));
        neg.children.push_back(std::move(t));
        t = std::move(neg);
      }
      sum.span = join(sum.span, t.span);
      sum.children.push_back(std::move(t));
    }
    return sum;
  }

  ExprNode term() {
    ExprNode first = factor();
    if (!at_op('*')) return first;
    ExprNode prod = make_node(ExprNode::Kind::Product, first.span);
    prod.children.push_back(std::move(first));
    while (at_op('*')) {
      take();
      ExprNode f = factor();
      prod.span = join(prod.span, f.span);
      prod.children.push_back(std::move(f));
    }
    return prod;
  }

  ExprNode factor() {
    if (at_op('-') || at_op('+')) {
      Token op = take();
      ExprNode inner = factor();
      if (op.text[0] == '+') return inner;
      ExprNode neg = make_node(ExprNode::Kind::Negate, join(op.span, inner.span));
      neg.children.push_back(std::move(inner));
      return neg;
    }
    ExprNode base = atom();
    if (!at_op('^')) return base;
    take();
    Span start = peek().span;
    long e = signed_integer();
    if (e < INT_MIN / 2 || e > INT_MAX / 2) throw ExprError("exponent out of range", start);
    ExprNode pw = make_node(ExprNode::Kind::Power, join(base.span, toks_[pos_ - 1].span));
    pw.exponent = static_cast<int>(e);
    pw.children.push_back(std::move(base));
    return pw;
  }

  ExprNode atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      Span span = t.span;
      mpq_class v(integer());
      if (at_op('/')) {
        take();
        long den = integer();
        span = join(span, toks_[pos_ - 1].span);
        if (den == 0) throw ExprError("zero denominator", span);
        v /= den;
      }
      ExprNode n = make_node(ExprNode::Kind::Scalar, span);
      n.scalar = GaussRational(v);
      return n;
    }
    if (t.kind == Token::Kind::Ident) {
      Token id = take();
      if (id.text == "i") {
        ExprNode n = make_node(ExprNode::Kind::Scalar, id.span);
        n.scalar = GaussRational::imag_unit();
        return n;
      }
      if (id.text == "q") return q_power(id);
      ExprNode n = make_node(ExprNode::Kind::Symbol, id.span);
      n.name = id.text;
      return n;
    }
    if (at_op('(')) {
      Token open = take();
      ExprNode inner = expr();
      Span close = peek().span;
      expect(')');
      ExprNode g = make_node(ExprNode::Kind::Group, join(open.span, close));
      g.children.push_back(std::move(inner));
      return g;
    }
    fail(t.kind == Token::Kind::End ? "expected operand" : "unexpected '" + t.text + "'");
  }

  ExprNode q_power(const Token& q) {
    ExprNode n = make_node(ExprNode::Kind::QPower, q.span);
    n.s_exponent = 2;
    if (!at_op('^')) return n;
    take();
    long s;
    if (at_op('(')) {
      take();
      long k = signed_integer();
      s = 2 * k;
      if (at_op('/')) {
        take();
        Span den_span = peek().span;
        if (integer() != 2) throw ExprError("q exponent denominator must be 2", den_span);
        s = k;
      }
      n.span = join(n.span, peek().span);
      expect(')');
    } else {
      s = 2 * signed_integer();
      n.span = join(n.span, toks_[pos_ - 1].span);
    }
    if (s < INT_MIN / 4 || s > INT_MAX / 4) throw ExprError("exponent out of range", n.span);
    n.s_exponent = static_cast<int>(s);
    return n;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprNode parse_expr(std::string_view text) { return Parser(Lexer(text).run()).parse(); }

NCPoly lower(const ExprNode& node, const AlgebraPtr& alg) {
  using K = ExprNode::Kind;
  switch (node.kind) {
    case K::Scalar:
      return NCPoly(alg, Laurent(node.scalar));
    case K::QPower:
      return NCPoly(alg, Laurent::monomial(node.s_exponent));
    case K::Symbol:
      if (!alg->find(node.name))
        throw ExprError("unknown generator '" + node.name + "' in algebra '" + alg->name() + "'", node.span);
      return NCPoly::generator(alg, node.name);
    case K::Sum: {
      NCPoly out(alg);
      for (const auto& c : node.children) out += lower(c, alg);
      return out;
    }
    case K::Product: {
      NCPoly out(alg, Laurent(1));
      for (const auto& c : node.children) out = out * lower(c, alg);
      return out;
    }
    case K::Power: {
      NCPoly base = lower(node.children.front(), alg);
      if (node.exponent >= 0) return base.pow(static_cast<unsigned>(node.exponent));
      Laurent s = base.scalar_part();
      if (!base.is_scalar() || !s.is_monomial())
        throw ExprError("negative power of a non-monomial", node.span);
      return NCPoly(alg, s.inverse_monomial().pow(static_cast<unsigned>(-node.exponent)));
    }
    case K::Negate:
      return -lower(node.children.front(), alg);
    case K::Group:
      return lower(node.children.front(), alg);
  }
  return NCPoly(alg);
}

NCPoly parse_poly(std::string_view text, const AlgebraPtr& alg) { return lower(parse_expr(text), alg); }

std::string print_canonical(const NCPoly& p) { return p.to_string(); }

std::string to_sexpr(const ExprNode& node) {
  using K = ExprNode::Kind;
  auto list = [&](const char* head) {
    std::string s = std::string("(") + head;
    for (const auto& c : node.children) s += " " + to_sexpr(c);
    return s + ")";
  };
  switch (node.kind) {
    case K::Scalar:
      return node.scalar.to_string();
    case K::QPower:
      return Laurent::monomial(node.s_exponent).to_string();
    case K::Symbol:
      return node.name;
    case K::Sum:
      return list("+");
    case K::Product:
      return list("*");
    case K::Power:
      return "(^ " + to_sexpr(node.children.front()) + " " + std::to_string(node.exponent) + ")";
    case K::Negate:
      return list("-");
    case K::Group:
      return to_sexpr(node.children.front());
  }
  return {};
}

}  // namespace qlorentz
