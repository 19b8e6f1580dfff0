#include "dilex/wf.hpp"

#include <random>
#include <stdexcept>

namespace dilex {

DescendingChain make_chain(const Order& X, std::vector<Term> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!X.contains(elements[i])) {
      throw std::invalid_argument("chain element outside the order: " + elements[i].repr());
    }
    if (i > 0 && !X.less(elements[i], elements[i - 1])) {
      throw std::invalid_argument("chain is not strictly descending at position " +
                                  std::to_string(i));
    }
  }
  return DescendingChain{X, std::move(elements)};
}

namespace {

class Budget {
 public:
  explicit Budget(std::size_t n) : left_(n) {}
  bool spend() {
    if (left_ == 0) return false;
    --left_;
    return true;
  }

 private:
  std::size_t left_;
};

// Extends the pool by one enumerated element; false past a finite end.
bool extend_pool(const Order& X, std::vector<Term>& pool) {
  if (auto n = X.size(); n && pool.size() >= *n) return false;
  pool.push_back(X.at(pool.size()));
  return true;
}

}  // namespace

std::optional<DescendingChain> descending_search(const Order& X, std::size_t budget,
                                                 SearchStrategy strategy, std::uint64_t seed) {
  if (budget == 0) return DescendingChain{X, {}};
  Budget comparisons(budget * 50);
  std::mt19937_64 rng(seed);
  std::vector<Term> pool = X.first(budget);
  if (pool.empty()) return std::nullopt;

  // Starting point: the comparison-maximal element of the initial pool.
  std::size_t start = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (!comparisons.spend()) return std::nullopt;
    if (X.less(pool[start], pool[i])) start = i;
  }
  std::vector<Term> chain{pool[start]};

  while (chain.size() < budget) {
    const Term& current = chain.back();
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!comparisons.spend()) return std::nullopt;
      if (X.less(pool[i], current)) below.push_back(i);
    }
    // Nothing below among the enumerated elements: extend the pool until a
    // smaller element shows up, checking only the new arrivals.
    while (below.empty()) {
      if (!extend_pool(X, pool)) return std::nullopt;
      if (!comparisons.spend()) return std::nullopt;
      if (X.less(pool.back(), current)) below.push_back(pool.size() - 1);
    }
    std::size_t pick = below.front();
    if (strategy == SearchStrategy::greedy_min_above) {
      for (std::size_t idx : below) {
        if (!comparisons.spend()) return std::nullopt;
        if (X.less(pool[idx], pool[pick])) pick = idx;
      }
    } else {
      pick = below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)];
    }
    chain.push_back(pool[pick]);
  }
  return DescendingChain{X, std::move(chain)};
}

std::size_t stabilize_index(const DescendingChain& chain) {
  const auto& e = chain.elements;
  if (e.empty()) return 0;
  std::size_t n = e.size() - 1;
  while (n > 0 && e[n - 1].kids()[0] == e[n].kids()[0]) --n;
  for (std::size_t i = n; i + 1 < e.size(); ++i) {
    if (!(e[i].kids()[0] == e[i + 1].kids()[0]) ||
        !chain.order.less(e[i + 1], e[i])) {
      throw std::logic_error("tail of second components is not strictly descending");
    }
  }
  return n;
}

ChainTransferResult chain_transfer(const Order& B, const std::function<Term(const Term&)>& h,
                                   const DescendingChain& chain) {
  std::vector<Term> image;
  image.reserve(chain.elements.size());
  for (const Term& x : chain.elements) image.push_back(h(x));
  for (std::size_t i = 0; i + 1 < image.size(); ++i) {
    if (!B.less(image[i + 1], image[i])) {
      return {std::nullopt, "strictness fails between positions " + std::to_string(i) + " and " +
                                std::to_string(i + 1) + ": " + B.print(image[i]) + " vs " +
                                B.print(image[i + 1])};
    }
  }
  return {DescendingChain{B, std::move(image)}, ""};
}

}  // namespace dilex
