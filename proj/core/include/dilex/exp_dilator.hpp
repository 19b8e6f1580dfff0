#pragma once

#include <functional>
#include <vector>

#include "dilex/extension.hpp"
#include "dilex/order.hpp"
#include "dilex/ordinal.hpp"
#include "dilex/praedilator.hpp"
#include "dilex/term.hpp"

namespace dilex {

/// The exponential normal dilator E, realizing a |-> w^(w^a). Elements are
/// two-level CNF terms over atoms drawn from a base order X:
///   outer: Term::tuple of parts tuple({inner, nat coeff}), inner terms
///   strictly decreasing; inner: Term::tuple of parts tuple({atom, nat
///   coeff}), atoms strictly decreasing in X. The empty outer tuple is 0.

// E(X) for an arbitrary coded order of atoms.
Order E_order(const Order& X);

// The restriction to finite atom orders, with supp = occurring atoms and
// mu^E_n(m) = w^(w^m).
PraeDilator E_build();

// Term arithmetic over atom order X.
std::strong_ordering e_cmp(const Order& X, const Term& a, const Term& b);
Term e_add(const Order& X, const Term& a, const Term& b);
Term e_nat(std::uint64_t n);
// Applies h to every atom; h must be strictly order-preserving.
Term e_rename(const std::function<Term(const Term&)>& h, const Term& t);

// Reads atoms m < n as the ordinals m; strictly order-preserving into
// w^(w^n).
Ordinal denote_E(std::size_t n, const Term& t);

// Symbolic action of the normal function f on ETerms, uniform in the
// atoms: denote_E(n, symbolic_f(t)) = f_eval(denote_E(n, t)).
Term symbolic_f(const Order& X, const Term& t);

/// A prae-dilator S with normality data together with a natural family
/// xi_n: (F o S)(n) -> S(n) making (S, xi) an upper derivative of F.
struct UpperDerivative {
  PraeDilator S;
  std::function<Term(std::size_t, const Term&)> xi;
};

// The concrete upper derivative (E, xi) with xi(bot) = 0,
// xi(<t,bot>) = symbolic_f(t), xi(<t,s>) = symbolic_f(t) + 1 + s.
UpperDerivative xi_build();

// xi^F_X = D^xi_X o zeta^{F,S}_X o eta^{-1}: F(D^G(X)) -> D^G(X).
Term xi_F(const Order& X, const UpperDerivative& G, const Term& ft);

// The order embedding J: 2^X -> D^G(X), J(<>) = xi^F(bot) and
// J(x0,rest) = xi^F(<D^mu_X(x0), J(rest)>). Input must strictly descend.
Term J_embed(const Order& X, const UpperDerivative& G, const std::vector<Term>& seq);

}  // namespace dilex
