#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "dilex/ordinal.hpp"

namespace dilex {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Abstract syntax for ordinal expressions: naturals, the symbol w,
/// and +, *, ^ with precedence ^ > * > + (^ right-associative).
struct OrdinalExpr {
  enum class Node { nat, omega, add, mul, pow };
  Node node;
  std::uint64_t value = 0;  // for nat
  std::shared_ptr<OrdinalExpr> lhs, rhs;
};

// Parses an expression; whitespace insensitive. Finite literals must fit
// in 32 bits. Throws ParseError with the offending position.
OrdinalExpr parse_expr(const std::string& text);

// Evaluates to CNF. Exponentiation is restricted to base w (omega_pow)
// and the literal base 2 (two_pow); other bases raise ParseError-free
// std::invalid_argument since the shape is known only after parsing.
Ordinal eval_expr(const OrdinalExpr& expr);

// parse + eval in one step.
Ordinal parse_ordinal(const std::string& text);

}  // namespace dilex
