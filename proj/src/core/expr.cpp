#include "core/expr.hpp"

#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace opticroute {

namespace {

enum class Op { Constant, VarX, VarY, Add, Sub, Mul, Div, Pow, Neg };

}  // namespace

struct Expression::Node {
  Op op;
  double value = 0.0;  // Constant only
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;

  double eval(double x, double y) const {
    switch (op) {
      case Op::Constant: return value;
      case Op::VarX: return x;
      case Op::VarY: return y;
      case Op::Add: return lhs->eval(x, y) + rhs->eval(x, y);
      case Op::Sub: return lhs->eval(x, y) - rhs->eval(x, y);
      case Op::Mul: return lhs->eval(x, y) * rhs->eval(x, y);
      case Op::Div: return lhs->eval(x, y) / rhs->eval(x, y);
      case Op::Pow: return std::pow(lhs->eval(x, y), rhs->eval(x, y));
      case Op::Neg: return -lhs->eval(x, y);
    }
    return 0.0;
  }

  std::unique_ptr<Node> clone() const {
    auto n = std::make_unique<Node>();
    n->op = op;
    n->value = value;
    if (lhs) n->lhs = lhs->clone();
    if (rhs) n->rhs = rhs->clone();
    return n;
  }
};

namespace {

using Node = Expression::Node;
using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_unique<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    auto node = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParamError("expression error at position " + std::to_string(pos_) + ": " + msg +
                     " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    auto node = parse_term();
    for (;;) {
      if (accept('+'))
        node = make_node(Op::Add, std::move(node), parse_term());
      else if (accept('-'))
        node = make_node(Op::Sub, std::move(node), parse_term());
      else
        return node;
    }
  }

  NodePtr parse_term() {
    auto node = parse_unary();
    for (;;) {
      if (accept('*'))
        node = make_node(Op::Mul, std::move(node), parse_unary());
      else if (accept('/'))
        node = make_node(Op::Div, std::move(node), parse_unary());
      else
        return node;
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make_node(Op::Neg, parse_unary());
    return parse_power();
  }

  // '^' binds tighter than unary minus and associates right: -x^2 == -(x^2).
  NodePtr parse_power() {
    auto base = parse_atom();
    if (accept('^')) return make_node(Op::Pow, std::move(base), parse_unary());
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto node = parse_expr();
      if (!accept(')')) fail("missing ')'");
      return node;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return make_node(c == 'x' ? Op::VarX : Op::VarY);
    }
    if ((c >= '0' && c <= '9') || c == '.') {
      double value = 0.0;
      const char* begin = text_.data() + pos_;
      const char* end = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc()) fail("malformed number");
      pos_ += static_cast<std::size_t>(ptr - begin);
      auto n = make_node(Op::Constant);
      n->value = value;
      return n;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  Parser p(text);
  return Expression(std::string(text), p.run());
}

double Expression::eval(double x, double y) const { return root_->eval(x, y); }

Expression::Expression(std::string text, std::unique_ptr<Node> root)
    : text_(std::move(text)), root_(std::move(root)) {}

Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::~Expression() = default;

Expression::Expression(const Expression& o) : text_(o.text_), root_(o.root_->clone()) {}

Expression& Expression::operator=(const Expression& o) {
  if (this != &o) {
    text_ = o.text_;
    root_ = o.root_->clone();
  }
  return *this;
}

}  // namespace opticroute
