#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dilex/extension.hpp"
#include "dilex/normal_f.hpp"
#include "dilex/ordinal_expr.hpp"

using namespace dilex;

TEST_CASE("F over finite orders: shapes and sizes") {
  CHECK(F_order(make_fin(0)).size() == 1);
  CHECK(F_order(make_fin(1)).size() == 2);
  // |F(n)| = 1 + n(n+1)/2
  CHECK(F_order(make_fin(4)).size() == 11);
  Order F1 = F_order(make_fin(1));
  CHECK(F1.at(0) == Term::bot());
  CHECK(F1.at(1) == Term::tuple({Term::nat(0), Term::bot()}));
  Order F3 = F_order(make_fin(3));
  CHECK(F3.contains(Term::tuple({Term::nat(2), Term::nat(0)})));
  CHECK_FALSE(F3.contains(Term::tuple({Term::nat(0), Term::nat(2)})));  // y must be below x
  CHECK_FALSE(F3.contains(Term::tuple({Term::nat(1), Term::nat(1)})));
}

TEST_CASE("F comparison: bot first, then lexicographic in (x, 1+y)") {
  Order F3 = F_order(make_fin(3));
  Term b = Term::bot();
  Term p0 = Term::tuple({Term::nat(0), Term::bot()});
  Term p1 = Term::tuple({Term::nat(1), Term::bot()});
  Term p10 = Term::tuple({Term::nat(1), Term::nat(0)});
  Term p2 = Term::tuple({Term::nat(2), Term::bot()});
  CHECK(F3.less(b, p0));
  CHECK(F3.less(p0, p1));
  CHECK(F3.less(p1, p10));
  CHECK(F3.less(p10, p2));
}

TEST_CASE("F as a prae-dilator: supports and mu") {
  PraeDilator F = F_build();
  CHECK(F.supp(3, Term::bot()).empty());
  CHECK(F.supp(3, Term::tuple({Term::nat(2), Term::bot()})) == std::vector<std::size_t>{2});
  CHECK(F.supp(3, Term::tuple({Term::nat(1), Term::nat(0)})) ==
        std::vector<std::size_t>{0, 1});
  REQUIRE(F.normal.has_value());
  CHECK(F.normal->mu(3, 1) == Term::tuple({Term::nat(1), Term::bot()}));
  OrderEmbedding f = make_embedding(2, 5, {1, 4});
  CHECK(F.map(f, Term::tuple({Term::nat(1), Term::nat(0)})) ==
        Term::tuple({Term::nat(4), Term::nat(1)}));
}

TEST_CASE("eta is an order isomorphism D^F(X) -> F(X)") {
  PraeDilator F = F_build();
  for (std::size_t n = 0; n <= 5; ++n) {
    Order X = make_fin(n);
    Order DX = ext_order(F, X);
    Order FX = F_order(X);
    REQUIRE(DX.size() == FX.size());
    auto report = order_iso_check(
        DX, FX, [&](const Term& e) { return eta(X, e); }, *DX.size(), true);
    CHECK(report.ok());
  }
  Order W = make_ordinal_order(parse_ordinal("w^2"));
  Order DW = ext_order(F_build(), W);
  auto report = order_iso_check(
      DW, F_order(W), [&](const Term& e) { return eta(W, e); }, 60, false);
  CHECK(report.ok());
}

TEST_CASE("eta and eta_inv are mutually inverse") {
  PraeDilator F = F_build();
  Order X = make_ordinal_order(Ordinal::omega());
  Order DX = ext_order(F, X);
  for (const Term& e : DX.first(40)) {
    Term t = eta(X, e);
    CHECK(eta_inv(t) == e);
  }
  Order FX = F_order(X);
  for (const Term& t : FX.first(40)) {
    CHECK(eta(X, eta_inv(t)) == t);
  }
}

TEST_CASE("eta collapses D^mu to mu: eta(ext_mu(x)) = <x, bot>") {
  PraeDilator F = F_build();
  Order X = make_ordinal_order(Ordinal::omega());
  for (const Term& x : X.first(8)) {
    CHECK(eta(X, ext_mu(F, X, x)) == Term::tuple({x, Term::bot()}));
  }
}

TEST_CASE("square_embed is order-preserving into (1+X)^2") {
  CHECK(square_embed(Term::bot()) == Term::tuple({Term::bot(), Term::bot()}));
  Term p = Term::tuple({Term::nat(3), Term::nat(1)});
  CHECK(square_embed(p) == p);
  for (std::size_t n = 0; n <= 6; ++n) {
    Order X = make_fin(n);
    Order FX = F_order(X);
    Order sq = make_lex_square(X);
    auto report = order_iso_check(FX, sq, square_embed, *FX.size(), false);
    CHECK(report.ok());
  }
}

TEST_CASE("F_val realizes the rank function") {
  Order X = make_ordinal_order(parse_ordinal("w^w"));
  CHECK(F_val(X, Term::bot()) == Ordinal(0));
  // val(<w, bot>) = f(w) = w
  CHECK(F_val(X, Term::tuple({ord_to_term(Ordinal::omega()), Term::bot()})) == Ordinal::omega());
  // val(<w, 3>) = f(w) + 1 + 3 = w + 4
  CHECK(F_val(X, Term::tuple({ord_to_term(Ordinal::omega()), ord_to_term(Ordinal(3))})) ==
        parse_ordinal("w+4"));
  // F's own order agrees with the ranks
  Order FX = F_order(X);
  auto elems = FX.first(40);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      CHECK(FX.compare(elems[i], elems[j]) == cmp(F_val(X, elems[i]), F_val(X, elems[j])));
    }
  }
}

TEST_CASE("F passes the validators") {
  PraeDilator F = F_build();
  CHECK(validate_praedilator(F, 4, 50).ok());
  CHECK(validate_normal(F, 4, 50).ok());
}
