#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dilex/exp_dilator.hpp"
#include "dilex/extension.hpp"
#include "dilex/normal_f.hpp"
#include "dilex/ordinal_expr.hpp"

using namespace dilex;

TEST_CASE("ext element construction and accessors") {
  PraeDilator F = F_build();
  Order X = make_fin(4);
  FinSubset a = make_subset(X, {Term::nat(1), Term::nat(3)});
  Term sigma = Term::tuple({Term::nat(1), Term::nat(0)});  // full support in F(2)
  Term e = make_ext_element(F, X, a, sigma);
  CHECK(ext_sigma(e) == sigma);
  CHECK(ext_support(X, e).elements == a.elements);
  // not full support: <1,bot> in F(2) only touches position 1
  CHECK_THROWS_AS(make_ext_element(F, X, a, Term::tuple({Term::nat(1), Term::bot()})),
                  std::invalid_argument);
  // membership violation
  FinSubset bad = make_subset(X, {Term::nat(1)});
  CHECK_THROWS_AS(make_ext_element(F, X, bad, Term::nat(7)), std::invalid_argument);
}

TEST_CASE("ext order sizes for F over finite orders") {
  PraeDilator F = F_build();
  CHECK(ext_order(F, make_fin(0)).size() == 1);
  CHECK(ext_order(F, make_fin(2)).size() == 4);
  // counting oracle in miniature: |D^F(fin(n))| = f(n)
  CHECK(ext_order(F, make_fin(3)).size() == 7);
}

TEST_CASE("D^identity(X) is isomorphic to X") {
  PraeDilator I = zoo("identity");
  Order X = make_ordinal_order(parse_ordinal("w^2"));
  Order DX = ext_order(I, X);
  auto h = [&](const Term& x) { return ext_mu(I, X, x); };
  auto report = order_iso_check(X, DX, h, 40, true);
  CHECK(report.ok());
}

TEST_CASE("ext_mu marks suprema: <a,sigma> < mu(x) iff a below x") {
  PraeDilator F = F_build();
  Order X = make_ordinal_order(Ordinal::omega());
  Order DX = ext_order(F, X);
  for (const Term& x : X.first(5)) {
    Term bound = ext_mu(F, X, x);
    for (const Term& e : DX.first(30)) {
      bool below = DX.less(e, bound);
      bool contained = true;
      for (const Term& y : ext_support(X, e).elements) {
        if (!X.less(y, x)) contained = false;
      }
      CHECK(below == contained);
    }
  }
}

TEST_CASE("ext_map renames supports and preserves order") {
  PraeDilator F = F_build();
  Order X = make_fin(3);
  Order Y = make_fin(6);
  auto h = [](const Term& t) { return Term::nat(t.value() * 2); };
  Order DX = ext_order(F, X);
  Order DY = ext_order(F, Y);
  for (const Term& e : DX.first(*DX.size())) {
    Term image = ext_map(Y, h, e);
    CHECK(ext_sigma(image) == ext_sigma(e));
    FinSubset a = ext_support(X, e);
    FinSubset b = ext_support(Y, image);
    REQUIRE(a.elements.size() == b.elements.size());
    for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(b.elements[i] == h(a.elements[i]));
  }
  auto report = order_iso_check(
      DX, DY, [&](const Term& e) { return ext_map(Y, h, e); }, *DX.size(), false);
  CHECK(report.ok());
  // a non-increasing h is rejected
  auto flip = [](const Term& t) { return Term::nat(2 - t.value()); };
  Term two_pos = DX.first(*DX.size()).back();
  REQUIRE(ext_support(X, two_pos).elements.size() == 2);
  CHECK_THROWS_AS(ext_map(Y, flip, two_pos), std::invalid_argument);
}

TEST_CASE("ext_to_general matches eta for F") {
  PraeDilator F = F_build();
  Order X = make_ordinal_order(Ordinal::omega());
  Order DX = ext_order(F, X);
  for (const Term& e : DX.first(25)) {
    CHECK(ext_to_general(F, X, e) == eta(X, e));
  }
}

TEST_CASE("normalize_full_support finds the unique representative") {
  PraeDilator F = F_build();
  Term s = Term::tuple({Term::nat(4), Term::nat(2)});
  ExtNormalForm nf = normalize_full_support(F, 5, s);
  CHECK(nf.positions == std::vector<std::size_t>{2, 4});
  CHECK(nf.tau == Term::tuple({Term::nat(1), Term::nat(0)}));
  ExtNormalForm nb = normalize_full_support(F, 5, Term::bot());
  CHECK(nb.positions.empty());
  CHECK(nb.tau == Term::bot());
}

TEST_CASE("composition of dilators: successor twice gives 1 + (1 + n)") {
  PraeDilator S = zoo("successor");
  PraeDilator TS = compose_dilators(S, S);
  CHECK(TS.at(2).size() == 4);
  CHECK(TS.at(0).size() == 2);
  CHECK(validate_praedilator(TS, 3, 30).ok());
}

TEST_CASE("composition F o E validates as a normal prae-dilator") {
  PraeDilator FE = compose_dilators(F_build(), E_build());
  CHECK(validate_praedilator(FE, 3, 15).ok());
  CHECK(validate_normal(FE, 3, 15).ok());
}

TEST_CASE("zeta is a bijection D^T(D^S(X)) <-> D^{ToS}(X)") {
  PraeDilator S = zoo("successor");
  PraeDilator TS = compose_dilators(S, S);
  Order X = make_fin(2);
  Order inner = ext_order(S, X);
  Order outer = ext_order(S, inner);
  Order fused = ext_order(TS, X);
  REQUIRE(outer.size() == fused.size());
  auto report = order_iso_check(
      outer, fused, [&](const Term& e) { return zeta_forward(S, S, X, e); }, *outer.size(), true);
  CHECK(report.ok());
  for (const Term& e : outer.first(*outer.size())) {
    CHECK(zeta_backward(S, S, X, zeta_forward(S, S, X, e)) == e);
  }
  for (const Term& e : fused.first(*fused.size())) {
    CHECK(zeta_forward(S, S, X, zeta_backward(S, S, X, e)) == e);
  }
}

TEST_CASE("zeta round-trips for F o E over an infinite order") {
  PraeDilator F = F_build();
  PraeDilator E = E_build();
  PraeDilator FE = compose_dilators(F, E);
  Order X = make_ordinal_order(Ordinal::omega());
  Order fused = ext_order(FE, X);
  for (const Term& e : fused.first(20)) {
    Term back = zeta_backward(F, E, X, e);
    CHECK(zeta_forward(F, E, X, back) == e);
  }
}

TEST_CASE("mu of a composition factors through zeta") {
  PraeDilator F = F_build();
  PraeDilator E = E_build();
  PraeDilator FE = compose_dilators(F, E);
  Order X = make_fin(4);
  Order inner = ext_order(E, X);
  for (const Term& x : X.first(4)) {
    Term direct = ext_mu(FE, X, x);
    Term staged = zeta_forward(F, E, X, ext_mu(F, inner, ext_mu(E, X, x)));
    CHECK(direct == staged);
  }
}
