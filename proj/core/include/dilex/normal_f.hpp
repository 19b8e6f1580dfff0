#pragma once

#include "dilex/extension.hpp"
#include "dilex/order.hpp"
#include "dilex/ordinal.hpp"
#include "dilex/praedilator.hpp"
#include "dilex/term.hpp"

namespace dilex {

/// The concrete normal dilator F with F(X) = 1 + Sigma_{x in 1+X} (1+X)|x.
/// Elements are Term::bot() or Term::tuple({x, y}) with x in X and
/// y in 1+X (bot or an X element) strictly below x.

// F(X) for an arbitrary coded order X; bot is the minimum.
Order F_order(const Order& X);

// The restriction of F to finite orders, with supports and mu_X(x) = <x,bot>.
PraeDilator F_build();

// The isomorphism eta_X: D^F(X) -> F(X), <a,sigma> |-> F(en_a)(sigma),
// and its inverse.
Term eta(const Order& X, const Term& e);
Term eta_inv(const Term& t);

// The embedding F(X) -> (1+X)^2: bot |-> (bot,bot), pairs map to themselves.
Term square_embed(const Term& t);

// Rank of t inside F(X) for X with a denotation: val(bot) = 0,
// val(<x,bot>) = f(x), val(<x,y>) = f(x) + 1 + y.
Ordinal F_val(const Order& X, const Term& t);

}  // namespace dilex
