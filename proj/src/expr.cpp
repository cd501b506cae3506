#include "isum/expr.hpp"

#include <cctype>
#include <cmath>

#include "isum/errors.hpp"

namespace isum {

struct Expression::Node {
  char op = 0;  // 'n' number, 'x', '+', '-', '*', '/', '^', 'u' unary minus, 'l' ln, 'e' exp
  double value = 0;
  std::shared_ptr<const Node> a, b;

  double eval(double x) const {
    switch (op) {
      case 'n': return value;
      case 'x': return x;
      case '+': return a->eval(x) + b->eval(x);
      case '-': return a->eval(x) - b->eval(x);
      case '*': return a->eval(x) * b->eval(x);
      case '/': return a->eval(x) / b->eval(x);
      case '^': return std::pow(a->eval(x), b->eval(x));
      case 'u': return -a->eval(x);
      case 'l': return std::log(a->eval(x));
      case 'e': return std::exp(a->eval(x));
    }
    return NAN;
  }
};

namespace {

using NodeP = std::shared_ptr<const Expression::Node>;

NodeP make(char op, NodeP a = nullptr, NodeP b = nullptr, double v = 0) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  n->value = v;
  return n;
}

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := atom ('^' unary)?
// atom   := number | x | pi | e | ln(expr) | exp(expr) | (expr)
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodeP parse() {
    NodeP n = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return n;
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("expression: " + msg + " at position " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  NodeP expr() {
    NodeP n = term();
    for (;;) {
      if (eat('+')) n = make('+', n, term());
      else if (eat('-')) n = make('-', n, term());
      else return n;
    }
  }
  NodeP term() {
    NodeP n = unary();
    for (;;) {
      if (eat('*')) n = make('*', n, unary());
      else if (eat('/')) n = make('/', n, unary());
      else return n;
    }
  }
  NodeP unary() {
    if (eat('-')) return make('u', unary());
    if (eat('+')) return unary();
    return power();
  }
  NodeP power() {
    NodeP n = atom();
    if (eat('^')) return make('^', n, unary());
    return n;
  }
  NodeP atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      double v = std::stod(s_.substr(i_), &used);
      i_ += used;
      return make('n', nullptr, nullptr, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
      std::string id = s_.substr(i_, j - i_);
      i_ = j;
      if (id == "x") return make('x');
      if (id == "pi") return make('n', nullptr, nullptr, M_PI);
      if (id == "e") return make('n', nullptr, nullptr, M_E);
      if (id == "ln" || id == "log" || id == "exp") {
        if (!eat('(')) fail("expected '(' after " + id);
        NodeP a = expr();
        if (!eat(')')) fail("expected ')'");
        return make(id == "exp" ? 'e' : 'l', a);
      }
      fail("unknown identifier '" + id + "'");
    }
    if (eat('(')) {
      NodeP n = expr();
      if (!eat(')')) fail("expected ')'");
      return n;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  return e;
}

double Expression::operator()(double x) const { return root_->eval(x); }

AdmissibleFunction expression_function(const std::string& text, int degree_p) {
  Expression e = Expression::parse(text);
  AdmissibleFunction g = make_function("expr:" + text, [e](double x) { return e(x); }, degree_p);
  if (g.degree_p < 0) g = resolve_degree(g);
  const int p = g.p();
  ConvexityReport rep = convexity_probe(g, p, 1.0, 64.0);
  g.convexity_sign = rep.violation ? 0 : rep.sign;
  // Alternating when the next orders flip sign in turn.
  bool alt = g.convexity_sign != 0;
  int prev = g.convexity_sign;
  for (int q = p + 1; alt && q <= p + 4; ++q) {
    ConvexityReport r = convexity_probe(g, q, 1.0, 64.0);
    alt = !r.violation && r.sign == -prev;
    prev = r.sign;
  }
  g.alternating = alt;
  return g;
}

}  // namespace isum
