#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dilex/order.hpp"
#include "dilex/praedilator.hpp"
#include "dilex/term.hpp"

namespace dilex {

/// The extension D^T(X) of a prae-dilator T to an arbitrary coded order X.
/// Elements are pairs <a, sigma> of a finite subset a of X and an element
/// sigma of T(|a|) with full support, coded as
///   Term::tuple({ Term::tuple(a ascending), sigma }).

// Builds the coded pair, validating membership and the full-support
// invariant; throws std::invalid_argument on violation.
Term make_ext_element(const PraeDilator& T, const Order& X, const FinSubset& a, Term sigma);
FinSubset ext_support(const Order& X, const Term& e);
const Term& ext_sigma(const Term& e);

// The coded order D^T(X). Comparison pushes both sides into T(|a0 u a1|)
// along the inclusions; enumeration interleaves subset weight with the
// index among full-support elements of T(|a|).
Order ext_order(const PraeDilator& T, const Order& X);

// D^T(h) for h: X -> Y strictly order-preserving: renames the support and
// keeps sigma. Throws std::invalid_argument when h is not strictly
// increasing on the support.
Term ext_map(const Order& Y, const std::function<Term(const Term&)>& h, const Term& e);

// D^mu_X(x) = <{x}, mu_1(0)>; requires T.normal and x in X.
Term ext_mu(const PraeDilator& T, const Order& X, const Term& x);

// For T with a general action (lift_map): the element of T(X) obtained by
// substituting en_a(i) for each position i inside sigma.
Term ext_to_general(const PraeDilator& T, const Order& X, const Term& e);

/// The unique full-support representative of an element s of S(n): the pair
/// of supp_n(s) and the pullback tau with S(en_supp)(tau) = s.
struct ExtNormalForm {
  std::vector<std::size_t> positions;
  Term tau;
};

ExtNormalForm normalize_full_support(const PraeDilator& S, std::size_t n, const Term& s,
                                     std::size_t search_bound = 100000);

// (T o S)(n) = D^T(S(n)), with the action, supports, and (when both carry
// it) normality data mu^{ToS}_n = D^{mu^T}_{S(n)} o mu^S_n.
PraeDilator compose_dilators(const PraeDilator& T, const PraeDilator& S);

// The isomorphism zeta^{T,S}_X: D^T(D^S(X)) -> D^{ToS}(X) and its inverse.
Term zeta_forward(const PraeDilator& T, const PraeDilator& S, const Order& X, const Term& e);
Term zeta_backward(const PraeDilator& T, const PraeDilator& S, const Order& X, const Term& e);

// D^xi_X: D^{ToS}(X) -> D^S(X) for a natural family xi_n: (ToS)(n) -> S(n).
Term dext_xi(const PraeDilator& S, const std::function<Term(std::size_t, const Term&)>& xi,
             const Order& X, const Term& e);

}  // namespace dilex
