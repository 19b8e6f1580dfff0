#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dilex/order.hpp"
#include "dilex/term.hpp"

namespace dilex {

/// A finite strictly descending sequence in a coded order.
struct DescendingChain {
  Order order;
  std::vector<Term> elements;
};

// Validates strict descent; throws std::invalid_argument on violation.
DescendingChain make_chain(const Order& X, std::vector<Term> elements);

enum class SearchStrategy { greedy_min_above, random };

// Bounded falsifier for well-foundedness: looks for a descending chain of
// length `budget` within budget*50 comparisons. greedy_min_above repeatedly
// steps to the comparison-minimal enumerated element strictly below the
// current one, extending the enumerated pool on demand; random picks a
// seeded random element below. Returns the chain or nothing.
std::optional<DescendingChain> descending_search(const Order& X, std::size_t budget,
                                                 SearchStrategy strategy =
                                                     SearchStrategy::greedy_min_above,
                                                 std::uint64_t seed = 0);

// For a chain in lex_square(X): the least N from which the first component
// stays constant; verifies that the tail of second components strictly
// descends (automatic for a valid chain, re-checked defensively).
std::size_t stabilize_index(const DescendingChain& chain);

struct ChainTransferResult {
  std::optional<DescendingChain> chain;  // image chain in the target order
  std::string failure;                   // witness when h fails strictness
  bool ok() const { return chain.has_value(); }
};

// Pushes a chain through h: A -> B, verifying strictness on every adjacent
// image pair; reports the first violating pair instead of throwing.
ChainTransferResult chain_transfer(const Order& B, const std::function<Term(const Term&)>& h,
                                   const DescendingChain& chain);

}  // namespace dilex
