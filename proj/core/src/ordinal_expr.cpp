#include "dilex/ordinal_expr.hpp"

#include <cctype>

namespace dilex {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  OrdinalExpr run() {
    OrdinalExpr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  static std::shared_ptr<OrdinalExpr> box(OrdinalExpr e) {
    return std::make_shared<OrdinalExpr>(std::move(e));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  OrdinalExpr parse_sum() {
    OrdinalExpr e = parse_product();
    while (eat('+')) {
      OrdinalExpr r = parse_product();
      e = OrdinalExpr{OrdinalExpr::Node::add, 0, box(std::move(e)), box(std::move(r))};
    }
    return e;
  }

  OrdinalExpr parse_product() {
    OrdinalExpr e = parse_power();
    while (eat('*')) {
      OrdinalExpr r = parse_power();
      e = OrdinalExpr{OrdinalExpr::Node::mul, 0, box(std::move(e)), box(std::move(r))};
    }
    return e;
  }

  OrdinalExpr parse_power() {
    OrdinalExpr base = parse_atom();
    if (eat('^')) {
      OrdinalExpr exp = parse_power();  // right-associative
      return OrdinalExpr{OrdinalExpr::Node::pow, 0, box(std::move(base)), box(std::move(exp))};
    }
    return base;
  }

  OrdinalExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      OrdinalExpr e = parse_sum();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == 'w') {
      ++pos_;
      return OrdinalExpr{OrdinalExpr::Node::omega};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::uint64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
        if (v > 0xFFFFFFFFULL) throw ParseError("finite literal exceeds 2^32", start);
        ++pos_;
      }
      return OrdinalExpr{OrdinalExpr::Node::nat, v};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

OrdinalExpr parse_expr(const std::string& text) { return Parser(text).run(); }

Ordinal eval_expr(const OrdinalExpr& expr) {
  switch (expr.node) {
    case OrdinalExpr::Node::nat:
      return Ordinal(expr.value);
    case OrdinalExpr::Node::omega:
      return Ordinal::omega();
    case OrdinalExpr::Node::add:
      return add(eval_expr(*expr.lhs), eval_expr(*expr.rhs));
    case OrdinalExpr::Node::mul:
      return mul(eval_expr(*expr.lhs), eval_expr(*expr.rhs));
    case OrdinalExpr::Node::pow: {
      const OrdinalExpr& base = *expr.lhs;
      if (base.node == OrdinalExpr::Node::omega) return omega_pow(eval_expr(*expr.rhs));
      if (base.node == OrdinalExpr::Node::nat && base.value == 2) {
        return two_pow(eval_expr(*expr.rhs));
      }
      throw std::invalid_argument("exponentiation base must be w or the literal 2");
    }
  }
  throw std::logic_error("unreachable");
}

Ordinal parse_ordinal(const std::string& text) { return eval_expr(parse_expr(text)); }

}  // namespace dilex
