#ifndef TRIGBVP_EXPRESSION_HPP
#define TRIGBVP_EXPRESSION_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trigbvp::expr {

// 1-based source location.
struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, SourcePos pos)
      : std::runtime_error(what), pos_(pos) {}
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

namespace ast {
struct Node;
}

// Immutable arithmetic expression over x, v, u, the constants pi and e,
// the operators + - * / ^ (with unary minus) and the calls
// sin cos tan exp log sqrt abs. Value-semantic handle; cheap to copy.
class Expression {
 public:
  // Standard precedence: ^ (right-associative) over unary minus over
  // * / over + -. Errors carry the 1-based line/column.
  static Expression parse(std::string_view text);

  // Minimal-parentheses form; parse(print()) reproduces the tree.
  std::string print() const;

  // Throws EvaluationError (with the source position packed into where())
  // on domain errors: log of a non-positive value, division by zero,
  // sqrt of a negative, non-finite results.
  double eval(double x, double v = 0.0, double u = 0.0) const;

  bool structurally_equal(const Expression& other) const;

  // True when the tree mentions v or u (not allowed in coefficient
  // expressions, which are functions of x alone).
  bool references_state() const;

 private:
  explicit Expression(std::shared_ptr<const ast::Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const ast::Node> root_;
};

}  // namespace trigbvp::expr

#endif  // TRIGBVP_EXPRESSION_HPP
