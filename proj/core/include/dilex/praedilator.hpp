#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dilex/order.hpp"
#include "dilex/term.hpp"

namespace dilex {

/// A functor from the finite orders to linear orders with a natural support
/// transformation (and, when present, the normality data mu_n: n -> T(n)).
/// Instances are code-level: each field is a pure function.
struct PraeDilator {
  struct Normal {
    // mu(n, m) for m < n.
    std::function<Term(std::size_t, std::size_t)> mu;
  };

  std::string name;
  // T(n) as a coded order.
  std::function<Order(std::size_t)> at;
  // T(f): T(f.dom) -> T(f.cod) on elements.
  std::function<Term(const OrderEmbedding&, const Term&)> map;
  // supp_n(sigma) as a sorted list of positions < n.
  std::function<std::vector<std::size_t>(std::size_t, const Term&)> supp;
  // Inverse of map along f, defined when supp(sigma) is contained in the
  // image of f. Optional fast path; validators use bounded search instead.
  std::function<Term(const OrderEmbedding&, const Term&)> unmap;
  std::optional<Normal> normal;

  // Optional action on arbitrary coded orders (provided by F and E): the
  // order T(X) and the renaming of an element along a map of elements.
  std::function<Order(const Order&)> lift_order;
  std::function<Term(const std::function<Term(const Term&)>&, const Term&)> lift_map;
};

// First `count` elements of T(m) whose support is all of {0..m-1}, scanning
// at most scan_bound enumerated elements.
std::vector<Term> full_support_elements(const PraeDilator& T, std::size_t m, std::size_t count,
                                        std::size_t scan_bound = 200000);

// Bounded search for the unique tau in T(|supp|) with T(en_supp)(tau) = sigma.
std::optional<Term> reconstruct_from_support(const PraeDilator& T, std::size_t n,
                                             const Term& sigma, std::size_t search_bound);

// Checks functoriality, strict monotonicity of the morphism action, supp
// naturality, and the support condition over all embeddings between orders
// of size <= size_bound and the first elem_bound elements of each T(n).
OrderCheckReport validate_praedilator(const PraeDilator& T, std::size_t size_bound,
                                      std::size_t elem_bound);

// Checks the normality biconditional sigma < mu_n(m) <=> supp(sigma) <= m,
// naturality and strictness of mu, and supp_1(mu_1(0)) = {0}.
OrderCheckReport validate_normal(const PraeDilator& T, std::size_t size_bound,
                                 std::size_t elem_bound);

// Small test instances: "identity", "successor", "constant_<k>".
PraeDilator zoo(const std::string& name);

}  // namespace dilex
