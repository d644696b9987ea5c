#ifndef OPTICROUTE_CORE_EXPR_HPP
#define OPTICROUTE_CORE_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

namespace opticroute {

// Arithmetic expression in the variables x and y: numbers (incl. scientific
// notation), + - * / ^, parentheses, unary minus. Just enough for the density
// profiles the experiments use; not a scripting language.
class Expression {
 public:
  // Throws ParamError with the offending position on a parse failure.
  static Expression parse(std::string_view text);

  double eval(double x, double y) const;
  const std::string& text() const { return text_; }

  Expression(Expression&&) noexcept;
  Expression& operator=(Expression&&) noexcept;
  Expression(const Expression&);
  Expression& operator=(const Expression&);
  ~Expression();

 private:
  struct Node;
  Expression(std::string text, std::unique_ptr<Node> root);

  std::string text_;
  std::unique_ptr<Node> root_;
};

}  // namespace opticroute

#endif
