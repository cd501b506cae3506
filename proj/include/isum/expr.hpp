#pragma once

#include <memory>
#include <string>

#include "isum/gmodel.hpp"

namespace isum {

// Arithmetic in x: numbers, pi, e, + - * / ^, unary minus, ln(), exp().
class Expression {
 public:
  static Expression parse(const std::string& text);
  double operator()(double x) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

// Wraps an expression as an admissible function. degree_p < 0 estimates it; the
// convexity sign and alternation are probed on [1, 64].
AdmissibleFunction expression_function(const std::string& text, int degree_p = -1);

}  // namespace isum
