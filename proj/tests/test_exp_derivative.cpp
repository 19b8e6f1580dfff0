#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dilex/exp_dilator.hpp"
#include "dilex/extension.hpp"
#include "dilex/normal_f.hpp"
#include "dilex/ordinal_expr.hpp"

using namespace dilex;

namespace {

// Builds the inner CNF term denoting the finite value k over atom 0.
Term inner_fin(std::uint64_t k) {
  if (k == 0) return Term::tuple({});
  return Term::tuple({Term::tuple({Term::nat(0), Term::nat(k)})});
}

}  // namespace

TEST_CASE("E over the empty atom order is the naturals") {
  Order E0 = E_order(make_fin(0));
  auto elems = E0.first(8);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CHECK(elems[i] == e_nat(i));
    CHECK(denote_E(0, elems[i]) == Ordinal(i));
  }
  for (std::size_t i = 0; i + 1 < elems.size(); ++i) CHECK(E0.less(elems[i], elems[i + 1]));
}

TEST_CASE("denotation of two-level terms") {
  PraeDilator E = E_build();
  // mu^E_n(m) denotes w^(w^m)
  CHECK(denote_E(2, E.normal->mu(2, 1)) == parse_ordinal("w^w"));
  CHECK(denote_E(1, E.normal->mu(1, 0)) == Ordinal::omega());
  // w^2*3 + 1 over a single atom
  Term t = Term::tuple({Term::tuple({inner_fin(2), Term::nat(3)}),
                        Term::tuple({Term::tuple({}), Term::nat(1)})});
  CHECK(E_order(make_fin(1)).contains(t));
  CHECK(denote_E(1, t) == parse_ordinal("w^2*3+1"));
}

TEST_CASE("e_cmp and e_add agree with the denotation") {
  std::size_t n = 2;
  Order X = make_fin(n);
  auto sample = E_order(X).first(40);
  for (const Term& a : sample) {
    for (const Term& b : sample) {
      CHECK(e_cmp(X, a, b) == cmp(denote_E(n, a), denote_E(n, b)));
    }
  }
  for (std::size_t i = 0; i < sample.size(); i += 5) {
    for (std::size_t j = 0; j < sample.size(); j += 7) {
      CHECK(denote_E(n, e_add(X, sample[i], sample[j])) ==
            add(denote_E(n, sample[i]), denote_E(n, sample[j])));
    }
  }
}

TEST_CASE("E enumeration respects the order on terms") {
  Order E2 = E_order(make_fin(2));
  auto elems = E2.first(30);
  // no duplicates, all contained
  for (std::size_t i = 0; i < elems.size(); ++i) {
    CHECK(E2.contains(elems[i]));
    for (std::size_t j = i + 1; j < elems.size(); ++j) CHECK_FALSE(elems[i] == elems[j]);
  }
}

TEST_CASE("mu^E marks the suprema in E(n)") {
  PraeDilator E = E_build();
  Order E2 = E.at(2);
  // the least term with support not inside {0} is w^(w^1) itself
  Term bound = E.normal->mu(2, 1);
  for (const Term& t : E2.first(60)) {
    bool below = E2.less(t, bound);
    auto s = E.supp(2, t);
    bool inside = std::all_of(s.begin(), s.end(), [](std::size_t v) { return v < 1; });
    CHECK(below == inside);
  }
}

TEST_CASE("E passes the validators") {
  PraeDilator E = E_build();
  CHECK(validate_praedilator(E, 4, 30).ok());
  CHECK(validate_normal(E, 4, 30).ok());
}

TEST_CASE("symbolic_f on closed values") {
  Order X = make_fin(1);
  CHECK(symbolic_f(X, e_nat(0)) == e_nat(1));
  CHECK(symbolic_f(X, e_nat(2)) == e_nat(4));
  // w + 1 |-> w*2
  Term omega = Term::tuple({Term::tuple({inner_fin(1), Term::nat(1)})});
  Term omega_p1 = e_add(X, omega, e_nat(1));
  Term omega_t2 = Term::tuple({Term::tuple({inner_fin(1), Term::nat(2)})});
  CHECK(symbolic_f(X, omega_p1) == omega_t2);
  // fixed points stay fixed, symbolically
  PraeDilator E = E_build();
  for (std::size_t m = 0; m < 3; ++m) {
    CHECK(symbolic_f(make_fin(3), E.normal->mu(3, m)) == E.normal->mu(3, m));
  }
}

TEST_CASE("symbolic_f commutes with the denotation (oracle square)") {
  for (std::size_t n = 0; n <= 3; ++n) {
    Order X = make_fin(n);
    for (const Term& t : E_order(X).first(60)) {
      CHECK(denote_E(n, symbolic_f(X, t)) == f_eval(denote_E(n, t)));
    }
  }
}

TEST_CASE("symbolic_f is natural in the atoms") {
  Order X = make_fin(2);
  Order Y = make_fin(5);
  for (const OrderEmbedding& f : enumerate_all_embeddings(2, 5)) {
    auto h = [&f](const Term& a) { return Term::nat(f(a.value())); };
    for (const Term& t : E_order(X).first(40)) {
      CHECK(e_rename(h, symbolic_f(X, t)) == symbolic_f(Y, e_rename(h, t)));
    }
  }
}

TEST_CASE("xi collapses mu of the composition onto mu^E") {
  UpperDerivative G = xi_build();
  PraeDilator FE = compose_dilators(F_build(), G.S);
  REQUIRE(FE.normal.has_value());
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t m = 0; m < n; ++m) {
      CHECK(G.xi(n, FE.normal->mu(n, m)) == G.S.normal->mu(n, m));
    }
  }
}

TEST_CASE("xi_n is order-preserving") {
  UpperDerivative G = xi_build();
  PraeDilator FE = compose_dilators(F_build(), G.S);
  for (std::size_t n = 0; n <= 2; ++n) {
    Order dom = FE.at(n);
    Order codom = G.S.at(n);
    auto report = order_iso_check(
        dom, codom, [&](const Term& r) { return G.xi(n, r); }, 30, false);
    CHECK(report.ok());
  }
}

TEST_CASE("xi is natural in n") {
  UpperDerivative G = xi_build();
  PraeDilator FE = compose_dilators(F_build(), G.S);
  for (std::size_t m = 0; m <= 2; ++m) {
    for (std::size_t n = m; n <= 3; ++n) {
      for (const OrderEmbedding& f : enumerate_all_embeddings(m, n)) {
        for (const Term& r : FE.at(m).first(15)) {
          CHECK(G.S.map(f, G.xi(m, r)) == G.xi(n, FE.map(f, r)));
        }
      }
    }
  }
}

TEST_CASE("xi_F fixes the image of D^mu") {
  UpperDerivative G = xi_build();
  Order X = make_ordinal_order(Ordinal::omega());
  for (const Term& x : X.first(5)) {
    Term mu_x = ext_mu(G.S, X, x);
    CHECK(xi_F(X, G, Term::tuple({mu_x, Term::bot()})) == mu_x);
  }
}

TEST_CASE("J_embed reference values") {
  UpperDerivative G = xi_build();

  Order X1 = make_fin(1);
  Order D1 = ext_order(G.S, X1);
  Term j_empty = J_embed(X1, G, {});
  CHECK(D1.denote(j_empty) == Ordinal(0));  // xi^F(bot) is the least element
  Term j0 = J_embed(X1, G, {Term::nat(0)});
  CHECK(D1.denote(j0) == parse_ordinal("w+1"));

  Order W = make_ordinal_order(Ordinal::omega());
  Order DW = ext_order(G.S, W);
  Term j = J_embed(W, G, {ord_to_term(Ordinal(3)), ord_to_term(Ordinal(1)),
                          ord_to_term(Ordinal(0))});
  CHECK(DW.denote(j) == parse_ordinal("w^w^3+w^w+w+1"));
  CHECK_THROWS_AS(J_embed(W, G, {ord_to_term(Ordinal(1)), ord_to_term(Ordinal(3))}),
                  std::invalid_argument);
}

TEST_CASE("J_embed preserves the lexicographic order on descending sequences") {
  UpperDerivative G = xi_build();
  Order X = make_fin(3);
  Order P = make_pow2(X);
  Order DX = ext_order(G.S, X);
  auto seqs = P.first(*P.size());
  for (const Term& s : seqs) {
    for (const Term& t : seqs) {
      Term js = J_embed(X, G, s.kids());
      Term jt = J_embed(X, G, t.kids());
      CHECK(DX.compare(js, jt) == P.compare(s, t));
    }
  }
  // the similarity invariant: J(sigma) < D^mu(x) whenever sigma starts below x
  for (const Term& s : seqs) {
    for (const Term& x : X.first(3)) {
      if (!s.kids().empty() && !X.less(s.kids().front(), x)) continue;
      CHECK(DX.less(J_embed(X, G, s.kids()), ext_mu(G.S, X, x)));
    }
  }
}
