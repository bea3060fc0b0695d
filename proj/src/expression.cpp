#include "trigbvp/expression.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

#include "trigbvp/errors.hpp"

namespace trigbvp::expr {

namespace ast {

enum class Kind { Number, Constant, Variable, Unary, Binary, Call };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class CallFn { Sin, Cos, Tan, Exp, Log, Sqrt, Abs };
enum class VarId { X, V, U };

struct Node {
  Kind kind = Kind::Number;
  double number = 0.0;       // Number
  int constant = 0;          // Constant: 0 = pi, 1 = e
  VarId var = VarId::X;      // Variable
  BinaryOp bop = BinaryOp::Add;
  CallFn fn = CallFn::Sin;
  std::shared_ptr<const Node> lhs;  // Unary/Call operand, Binary left
  std::shared_ptr<const Node> rhs;  // Binary right
  SourcePos pos;
};

}  // namespace ast

namespace {

using ast::BinaryOp;
using ast::CallFn;
using ast::Kind;
using ast::Node;
using ast::VarId;
using NodePtr = std::shared_ptr<const Node>;

struct Token {
  enum class Type { Number, Ident, Op, End };
  Type type = Type::End;
  double number = 0.0;
  std::string text;
  char op = 0;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token tok;
    tok.pos = pos_;
    if (at_end()) {
      tok.type = Token::Type::End;
      return tok;
    }
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return number_token(tok);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        tok.text.push_back(advance());
      }
      tok.type = Token::Type::Ident;
      return tok;
    }
    if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      tok.type = Token::Type::Op;
      tok.op = advance();
      return tok;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

 private:
  bool at_end() const { return index_ >= text_.size(); }
  char peek() const { return text_[index_]; }

  char advance() {
    const char c = text_[index_++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  Token number_token(Token tok) {
    std::string digits;
    bool seen_exp = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        digits.push_back(advance());
      } else if ((c == 'e' || c == 'E') && !seen_exp && index_ + 1 < text_.size() &&
                 (std::isdigit(static_cast<unsigned char>(text_[index_ + 1])) ||
                  ((text_[index_ + 1] == '+' || text_[index_ + 1] == '-') &&
                   index_ + 2 < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[index_ + 2]))))) {
        seen_exp = true;
        digits.push_back(advance());
        if (peek() == '+' || peek() == '-') digits.push_back(advance());
      } else {
        break;
      }
    }
    try {
      tok.number = std::stod(digits);
    } catch (const std::exception&) {
      throw ParseError("malformed number literal '" + digits + "'", tok.pos);
    }
    tok.type = Token::Type::Number;
    return tok;
  }

  std::string_view text_;
  std::size_t index_ = 0;
  SourcePos pos_{1, 1};
};

std::optional<CallFn> call_from_name(std::string_view name) {
  if (name == "sin") return CallFn::Sin;
  if (name == "cos") return CallFn::Cos;
  if (name == "tan") return CallFn::Tan;
  if (name == "exp") return CallFn::Exp;
  if (name == "log") return CallFn::Log;
  if (name == "sqrt") return CallFn::Sqrt;
  if (name == "abs") return CallFn::Abs;
  return std::nullopt;
}

std::string_view call_name(CallFn fn) {
  switch (fn) {
    case CallFn::Sin: return "sin";
    case CallFn::Cos: return "cos";
    case CallFn::Tan: return "tan";
    case CallFn::Exp: return "exp";
    case CallFn::Log: return "log";
    case CallFn::Sqrt: return "sqrt";
    case CallFn::Abs: return "abs";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  NodePtr parse_all() {
    NodePtr root = parse_sum();
    if (current_.type != Token::Type::End) {
      throw ParseError("unexpected trailing input", current_.pos);
    }
    return root;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  bool eat_op(char op) {
    if (current_.type == Token::Type::Op && current_.op == op) {
      shift();
      return true;
    }
    return false;
  }

  // sum := product (('+' | '-') product)*
  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    while (current_.type == Token::Type::Op && (current_.op == '+' || current_.op == '-')) {
      const char op = current_.op;
      const SourcePos pos = current_.pos;
      shift();
      NodePtr rhs = parse_product();
      lhs = binary(op == '+' ? BinaryOp::Add : BinaryOp::Sub, lhs, rhs, pos);
    }
    return lhs;
  }

  // product := unary (('*' | '/') unary)*
  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    while (current_.type == Token::Type::Op && (current_.op == '*' || current_.op == '/')) {
      const char op = current_.op;
      const SourcePos pos = current_.pos;
      shift();
      NodePtr rhs = parse_unary();
      lhs = binary(op == '*' ? BinaryOp::Mul : BinaryOp::Div, lhs, rhs, pos);
    }
    return lhs;
  }

  // unary := '-' unary | power
  NodePtr parse_unary() {
    if (current_.type == Token::Type::Op && current_.op == '-') {
      const SourcePos pos = current_.pos;
      shift();
      auto node = std::make_shared<Node>();
      node->kind = Kind::Unary;
      node->lhs = parse_unary();
      node->pos = pos;
      return node;
    }
    return parse_power();
  }

  // power := primary ('^' unary)?   (right-associative, binds above unary minus)
  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (current_.type == Token::Type::Op && current_.op == '^') {
      const SourcePos pos = current_.pos;
      shift();
      NodePtr exponent = parse_unary();
      return binary(BinaryOp::Pow, base, exponent, pos);
    }
    return base;
  }

  NodePtr parse_primary() {
    const Token tok = current_;
    if (tok.type == Token::Type::Number) {
      shift();
      auto node = std::make_shared<Node>();
      node->kind = Kind::Number;
      node->number = tok.number;
      node->pos = tok.pos;
      return node;
    }
    if (tok.type == Token::Type::Ident) {
      shift();
      if (auto fn = call_from_name(tok.text)) {
        if (!eat_op('(')) {
          throw ParseError("expected '(' after function '" + tok.text + "'", current_.pos);
        }
        NodePtr arg = parse_sum();
        if (!eat_op(')')) {
          throw ParseError("expected ')' to close call to '" + tok.text + "'", current_.pos);
        }
        auto node = std::make_shared<Node>();
        node->kind = Kind::Call;
        node->fn = *fn;
        node->lhs = arg;
        node->pos = tok.pos;
        return node;
      }
      auto node = std::make_shared<Node>();
      node->pos = tok.pos;
      if (tok.text == "x" || tok.text == "v" || tok.text == "u") {
        node->kind = Kind::Variable;
        node->var = tok.text == "x" ? VarId::X : (tok.text == "v" ? VarId::V : VarId::U);
        return node;
      }
      if (tok.text == "pi" || tok.text == "e") {
        node->kind = Kind::Constant;
        node->constant = tok.text == "pi" ? 0 : 1;
        return node;
      }
      throw ParseError("unknown identifier '" + tok.text + "'", tok.pos);
    }
    if (tok.type == Token::Type::Op && tok.op == '(') {
      shift();
      NodePtr inner = parse_sum();
      if (!eat_op(')')) {
        throw ParseError("expected ')'", current_.pos);
      }
      return inner;
    }
    if (tok.type == Token::Type::End) {
      throw ParseError("unexpected end of input", tok.pos);
    }
    throw ParseError(std::string("unexpected '") + tok.op + "'", tok.pos);
  }

  static NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs, SourcePos pos) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Binary;
    node->bop = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    node->pos = pos;
    return node;
  }

  Lexer lexer_;
  Token current_;
};

int precedence(const Node& node) {
  switch (node.kind) {
    case Kind::Binary:
      switch (node.bop) {
        case BinaryOp::Add:
        case BinaryOp::Sub: return 1;
        case BinaryOp::Mul:
        case BinaryOp::Div: return 2;
        case BinaryOp::Pow: return 4;
      }
      return 1;
    case Kind::Unary: return 3;
    default: return 5;
  }
}

void print_node(const Node& node, std::string& out) {
  auto child = [&out](const Node& c, bool parens) {
    if (parens) out.push_back('(');
    print_node(c, out);
    if (parens) out.push_back(')');
  };
  switch (node.kind) {
    case Kind::Number: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", node.number);
      out += buf;
      return;
    }
    case Kind::Constant:
      out += node.constant == 0 ? "pi" : "e";
      return;
    case Kind::Variable:
      out += node.var == VarId::X ? "x" : (node.var == VarId::V ? "v" : "u");
      return;
    case Kind::Unary:
      out.push_back('-');
      child(*node.lhs, precedence(*node.lhs) < 3);
      return;
    case Kind::Call:
      out += call_name(node.fn);
      out.push_back('(');
      print_node(*node.lhs, out);
      out.push_back(')');
      return;
    case Kind::Binary: {
      const int level = precedence(node);
      const char* ops[] = {"+", "-", "*", "/", "^"};
      if (node.bop == BinaryOp::Pow) {
        // Right-associative: parenthesize a left child at or below this level.
        child(*node.lhs, precedence(*node.lhs) <= level);
        out += "^";
        child(*node.rhs, precedence(*node.rhs) < 3);
      } else {
        child(*node.lhs, precedence(*node.lhs) < level);
        out += ops[static_cast<int>(node.bop)];
        child(*node.rhs, precedence(*node.rhs) <= level);
      }
      return;
    }
  }
}

[[noreturn]] void eval_fail(const Node& node, const std::string& what) {
  throw EvaluationError("expression error at line " + std::to_string(node.pos.line) +
                            ", column " + std::to_string(node.pos.column) + ": " + what,
                        node.pos.column);
}

double eval_node(const Node& node, double x, double v, double u) {
  switch (node.kind) {
    case Kind::Number: return node.number;
    case Kind::Constant: return node.constant == 0 ? std::numbers::pi : std::numbers::e;
    case Kind::Variable:
      return node.var == VarId::X ? x : (node.var == VarId::V ? v : u);
    case Kind::Unary: return -eval_node(*node.lhs, x, v, u);
    case Kind::Call: {
      const double a = eval_node(*node.lhs, x, v, u);
      double r = 0.0;
      switch (node.fn) {
        case CallFn::Sin: r = std::sin(a); break;
        case CallFn::Cos: r = std::cos(a); break;
        case CallFn::Tan: r = std::tan(a); break;
        case CallFn::Exp: r = std::exp(a); break;
        case CallFn::Log:
          if (!(a > 0.0)) eval_fail(node, "log of a non-positive value");
          r = std::log(a);
          break;
        case CallFn::Sqrt:
          if (a < 0.0) eval_fail(node, "sqrt of a negative value");
          r = std::sqrt(a);
          break;
        case CallFn::Abs: r = std::abs(a); break;
      }
      if (!std::isfinite(r)) eval_fail(node, "non-finite result");
      return r;
    }
    case Kind::Binary: {
      const double a = eval_node(*node.lhs, x, v, u);
      const double b = eval_node(*node.rhs, x, v, u);
      double r = 0.0;
      switch (node.bop) {
        case BinaryOp::Add: r = a + b; break;
        case BinaryOp::Sub: r = a - b; break;
        case BinaryOp::Mul: r = a * b; break;
        case BinaryOp::Div:
          if (b == 0.0) eval_fail(node, "division by zero");
          r = a / b;
          break;
        case BinaryOp::Pow:
          r = std::pow(a, b);
          break;
      }
      if (!std::isfinite(r)) eval_fail(node, "non-finite result");
      return r;
    }
  }
  eval_fail(node, "corrupt expression tree");
}

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Number: return a.number == b.number;
    case Kind::Constant: return a.constant == b.constant;
    case Kind::Variable: return a.var == b.var;
    case Kind::Unary: return equal_nodes(*a.lhs, *b.lhs);
    case Kind::Call: return a.fn == b.fn && equal_nodes(*a.lhs, *b.lhs);
    case Kind::Binary:
      return a.bop == b.bop && equal_nodes(*a.lhs, *b.lhs) && equal_nodes(*a.rhs, *b.rhs);
  }
  return false;
}

bool mentions_state(const Node& node) {
  switch (node.kind) {
    case Kind::Variable: return node.var != VarId::X;
    case Kind::Unary:
    case Kind::Call: return mentions_state(*node.lhs);
    case Kind::Binary: return mentions_state(*node.lhs) || mentions_state(*node.rhs);
    default: return false;
  }
}

}  // namespace

Expression Expression::parse(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty expression", SourcePos{1, 1});
  }
  Parser parser(text);
  return Expression(parser.parse_all());
}

std::string Expression::print() const {
  std::string out;
  print_node(*root_, out);
  return out;
}

double Expression::eval(double x, double v, double u) const {
  return eval_node(*root_, x, v, u);
}

bool Expression::structurally_equal(const Expression& other) const {
  return equal_nodes(*root_, *other.root_);
}

bool Expression::references_state() const { return mentions_state(*root_); }

}  // namespace trigbvp::expr
