#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dilex/ordinal.hpp"
#include "dilex/ordinal_expr.hpp"
#include "test_util.hpp"

using namespace dilex;

namespace {
Ordinal o(const std::string& s) { return parse_ordinal(s); }
}  // namespace

TEST_CASE("cnf construction and comparison") {
  CHECK(Ordinal(0).is_zero());
  CHECK(Ordinal(3).finite_value() == 3);
  CHECK(cmp(o("w"), o("5")) == std::strong_ordering::greater);
  CHECK(cmp(o("w^2+w"), o("w^2+w")) == std::strong_ordering::equal);
  CHECK(cmp(o("w^2"), o("w^2+1")) == std::strong_ordering::less);
  CHECK(cmp(o("w*2"), o("w*3")) == std::strong_ordering::less);
  CHECK_THROWS_AS(Ordinal::from_parts({{Ordinal(0), 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Ordinal::from_parts({{Ordinal(1), 1}, {Ordinal(2), 1}}), std::invalid_argument);
}

TEST_CASE("addition and multiplication") {
  CHECK(add(o("w"), o("1")) == o("w+1"));
  CHECK(add(o("1"), o("w")) == o("w"));  // left absorption
  CHECK(add(o("w^2+w"), o("w*2+1")) == o("w^2+w*3+1"));
  CHECK(mul(o("w"), o("w")) == o("w^2"));
  CHECK(mul(o("w+1"), o("2")) == o("w*2+1"));
  CHECK(mul(o("2"), o("w")) == o("w"));
  CHECK(mul(o("w^w+w"), o("w^2*2+3")) == o("w^(w+2)*2+w^w*3+w"));
  CHECK(square(o("w+1")) == o("w^2+w+1"));
}

TEST_CASE("two_pow matches w^a = 2^(w*a)") {
  CHECK(two_pow(o("w")) == o("w"));
  CHECK(two_pow(o("5")) == o("32"));
  CHECK(two_pow(o("w+3")) == o("w*8"));
  CHECK(two_pow(o("w^2")) == o("w^w"));
  for (const Ordinal& a : testutil::sample_ordinals(200, 11)) {
    CHECK(omega_pow(a) == two_pow(mul(Ordinal::omega(), a)));
  }
  // 2^(a+1) = 2^a * 2 whenever the finite part stays in range
  for (const Ordinal& a : testutil::sample_ordinals(100, 12)) {
    CHECK(two_pow(add(a, Ordinal(1))) == mul(two_pow(a), Ordinal(2)));
  }
}

TEST_CASE("classification and principality") {
  CHECK(classify(o("0")).tag == OrdKindTag::zero);
  CHECK(classify(o("w+3")).tag == OrdKindTag::successor);
  CHECK(classify(o("w+3")).predecessor == o("w+2"));
  CHECK(is_limit(o("w^2+w")));
  CHECK(is_add_principal(o("w^(w+1)")));
  CHECK_FALSE(is_add_principal(o("w*2")));
  CHECK(is_mult_principal(o("1")));
  CHECK(is_mult_principal(o("2")));
  CHECK(is_mult_principal(o("w")));
  CHECK(is_mult_principal(o("w^w")));
  CHECK_FALSE(is_mult_principal(o("w^2")));
  CHECK_FALSE(is_mult_principal(o("3")));
}

TEST_CASE("fundamental sequences") {
  CHECK(fund_seq(o("w"), 3) == o("3"));
  CHECK(fund_seq(o("w^2"), 3) == o("w*3"));
  CHECK(fund_seq(o("w^w"), 2) == o("w^2"));
  CHECK(fund_seq(o("w^2+w"), 4) == o("w^2+4"));
  CHECK_THROWS_AS(fund_seq(o("w+1"), 1), std::invalid_argument);
  // strictly increasing and below the limit
  for (const Ordinal& a : testutil::sample_ordinals(100, 13)) {
    if (!is_limit(a)) continue;
    Ordinal prev = fund_seq(a, 0);
    for (std::uint64_t n = 1; n <= 10; ++n) {
      Ordinal cur = fund_seq(a, n);
      CHECK(cmp(prev, cur) == std::strong_ordering::less);
      CHECK(cmp(cur, a) == std::strong_ordering::less);
      prev = cur;
    }
  }
}

TEST_CASE("f satisfies the defining recursion") {
  CHECK(f_eval(o("0")) == o("1"));
  CHECK(f_eval(o("1")) == o("2"));
  CHECK(f_eval(o("2")) == o("4"));
  CHECK(f_eval(o("w")) == o("w"));
  CHECK(f_eval(o("w+1")) == o("w*2"));
  CHECK(f_eval(o("w*2")) == o("w^2"));
  CHECK(f_eval(o("w^2")) == o("w^3"));
  CHECK(f_eval(o("w^w")) == o("w^w"));
  // f(a+1) = f(a) + 1 + a, the successor clause, on samples
  for (const Ordinal& a : testutil::sample_ordinals(300, 14)) {
    CHECK(f_eval(add(a, Ordinal(1))) == add(f_eval(a), add(Ordinal(1), a)));
  }
}

TEST_CASE("f is continuous at limits (cofinality at search bound 50)") {
  for (const Ordinal& l : testutil::sample_ordinals(60, 15)) {
    if (!is_limit(l)) continue;
    Ordinal fl = f_eval(l);
    REQUIRE(is_limit(fl));
    for (std::uint64_t k = 1; k <= 5; ++k) {
      Ordinal target = fund_seq(fl, k);
      bool dominated = false;
      for (std::uint64_t n = 0; n <= 50 && !dominated; ++n) {
        dominated = cmp(target, f_eval(fund_seq(l, n))) != std::strong_ordering::greater;
      }
      CHECK(dominated);
    }
  }
}

TEST_CASE("f is strictly increasing") {
  auto sample = testutil::sample_ordinals(60, 16);
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = 0; j < sample.size(); ++j) {
      CHECK(cmp(f_eval(sample[i]), f_eval(sample[j])) == cmp(sample[i], sample[j]));
      CHECK(cmp(g_eval(sample[i]), g_eval(sample[j])) == cmp(sample[i], sample[j]));
    }
  }
}

TEST_CASE("g satisfies the defining recursion") {
  CHECK(g_eval(o("0")) == o("1"));
  CHECK(g_eval(o("1")) == o("2"));
  CHECK(g_eval(o("w")) == o("w"));
  CHECK(g_eval(o("w+1")) == o("w*2+1"));
  CHECK(g_eval(o("w*2")) == o("w*3"));
  CHECK(g_eval(o("w^2")) == o("w^2"));
  CHECK(g_eval(o("w^2+w")) == o("w^2*2+w"));
  for (const Ordinal& a : testutil::sample_ordinals(300, 17)) {
    Ordinal succ = add(a, Ordinal(1));
    CHECK(g_eval(succ) == mul(succ, Ordinal(2)));
  }
}

TEST_CASE("bounds: f(a) <= 1+a^2 and products below f of the sum") {
  for (const Ordinal& a : testutil::sample_ordinals(200, 18)) {
    CHECK(cmp(f_eval(a), add(Ordinal(1), square(a))) != std::strong_ordering::greater);
    CHECK(cmp(g_eval(a), add(Ordinal(1), mul(a, Ordinal(2)))) != std::strong_ordering::greater);
  }
  auto bs = testutil::sample_ordinals(20, 19);
  auto cs = testutil::sample_ordinals(20, 20);
  for (const Ordinal& b : bs) {
    for (const Ordinal& c : cs) {
      CHECK(cmp(mul(b, c), f_eval(add(b, c))) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("fixed points of f are the multiplicatively principal limits") {
  for (const Ordinal& a : testutil::sample_ordinals(400, 21)) {
    bool fixed = f_eval(a) == a;
    CHECK(fixed == (is_mult_principal(a) && is_limit(a)));
    bool gfixed = g_eval(a) == a;
    CHECK(gfixed == (is_add_principal(a) && is_limit(a)));
  }
}

TEST_CASE("derivatives enumerate the fixed points") {
  for (const std::string& s : {"0", "1", "2", "w", "w+1", "w^2"}) {
    Ordinal a = o(s);
    CHECK(f_derivative(a) == omega_pow(omega_pow(a)));
    CHECK(f_eval(f_derivative(a)) == f_derivative(a));
    CHECK(g_derivative(a) == omega_pow(add(Ordinal(1), a)));
    CHECK(g_eval(g_derivative(a)) == g_derivative(a));
  }
  CHECK(f_derivative(o("0")) == o("w"));
  CHECK(f_derivative(o("1")) == o("w^w"));
  CHECK(g_derivative(o("0")) == o("w"));
  CHECK(g_derivative(o("w")) == o("w^w"));
}

TEST_CASE("expression parsing") {
  CHECK(o("w^w + w*2 + 3") == add(omega_pow(Ordinal::omega()),
                                  add(mul(Ordinal::omega(), Ordinal(2)), Ordinal(3))));
  CHECK(o("w^(w+1)") == omega_pow(o("w+1")));
  CHECK(o("2^w") == Ordinal::omega());
  CHECK(o("w^w^w") == omega_pow(omega_pow(Ordinal::omega())));  // right-assoc
  CHECK(o("(w+1)*2") == o("w*2+1"));
  CHECK_THROWS_AS(o("w+"), ParseError);
  CHECK_THROWS_AS(o("5000000000"), ParseError);  // literal over 2^32
  CHECK_THROWS_AS(o("3^w"), std::invalid_argument);
}

TEST_CASE("print / parse round-trip") {
  for (const Ordinal& a : testutil::sample_ordinals(200, 22)) {
    CHECK(parse_ordinal(to_string(a)) == a);
  }
  CHECK(to_string(o("w^(w+1)*2+w*3+1")) == "w^(w+1)*2+w*3+1");
  CHECK(to_string(Ordinal(0)) == "0");
}
