#include "dilex/normal_f.hpp"

#include <stdexcept>

namespace dilex {

namespace {

bool is_pair(const Term& t) { return t.is_tuple() && t.kids().size() == 2; }

class FOrderImpl : public Order::Impl {
 public:
  explicit FOrderImpl(Order x) : x_(std::move(x)) {}

  std::string name() const override { return "F(" + x_.name() + ")"; }

  bool contains(const Term& t) const override {
    if (t.is_bot()) return true;
    if (!is_pair(t)) return false;
    const Term& x = t.kids()[0];
    const Term& y = t.kids()[1];
    if (!x_.contains(x)) return false;
    return y.is_bot() || (x_.contains(y) && x_.less(y, x));
  }

  std::strong_ordering compare(const Term& a, const Term& b) const override {
    if (a.is_bot() || b.is_bot()) {
      return static_cast<int>(!a.is_bot()) <=> static_cast<int>(!b.is_bot());
    }
    if (auto c = x_.compare(a.kids()[0], b.kids()[0]); c != std::strong_ordering::equal) return c;
    const Term& ya = a.kids()[1];
    const Term& yb = b.kids()[1];
    if (ya.is_bot() || yb.is_bot()) {
      return static_cast<int>(!ya.is_bot()) <=> static_cast<int>(!yb.is_bot());
    }
    return x_.compare(ya, yb);
  }

  // grade(bot) = 0; grade(<x,y>) = (i+1) + (y = bot ? 0 : j+1) over the
  // enumeration indices of x and y in X.
  std::vector<Term> grade(std::size_t g) const override {
    if (g == 0) return {Term::bot()};
    std::vector<Term> out;
    auto n = x_.size();
    if (!n || g - 1 < *n) out.push_back(Term::tuple({x_.at(g - 1), Term::bot()}));
    for (std::size_t i = 0; i + 2 <= g; ++i) {
      std::size_t j = g - 2 - i;
      if (n && (i >= *n || j >= *n)) continue;
      Term x = x_.at(i);
      Term y = x_.at(j);
      if (x_.less(y, x)) out.push_back(Term::tuple({std::move(x), std::move(y)}));
    }
    return out;
  }

  std::optional<std::size_t> size() const override {
    if (auto n = x_.size()) return 1 + *n * (*n + 1) / 2;
    return std::nullopt;
  }

  std::optional<Ordinal> denote(const Term& t) const override {
    if (t.is_bot()) return Ordinal(0);
    auto dx = x_.denote(t.kids()[0]);
    if (!dx) return std::nullopt;
    if (t.kids()[1].is_bot()) return f_eval(*dx);
    auto dy = x_.denote(t.kids()[1]);
    if (!dy) return std::nullopt;
    return add(f_eval(*dx), add(Ordinal(1), *dy));
  }

  std::string print(const Term& t) const override {
    if (t.is_bot()) return "_";
    const Term& y = t.kids()[1];
    return "<" + x_.print(t.kids()[0]) + "," + (y.is_bot() ? "_" : x_.print(y)) + ">";
  }

 private:
  Order x_;
};

Term f_apply(const std::function<Term(const Term&)>& h, const Term& t) {
  if (t.is_bot()) return t;
  const Term& y = t.kids()[1];
  return Term::tuple({h(t.kids()[0]), y.is_bot() ? y : h(y)});
}

}  // namespace

Order F_order(const Order& X) { return Order(std::make_shared<FOrderImpl>(X)); }

PraeDilator F_build() {
  PraeDilator F;
  F.name = "F";
  F.at = [](std::size_t n) { return F_order(make_fin(n)); };
  F.map = [](const OrderEmbedding& f, const Term& t) {
    return f_apply([&f](const Term& x) { return Term::nat(f(x.value())); }, t);
  };
  F.supp = [](std::size_t, const Term& t) {
    if (t.is_bot()) return std::vector<std::size_t>{};
    std::size_t x = t.kids()[0].value();
    if (t.kids()[1].is_bot()) return std::vector<std::size_t>{x};
    return std::vector<std::size_t>{t.kids()[1].value(), x};  // y < x
  };
  F.unmap = [](const OrderEmbedding& f, const Term& t) {
    auto back = [&f](const Term& x) {
      for (std::size_t i = 0; i < f.dom; ++i) {
        if (f(i) == x.value()) return Term::nat(i);
      }
      throw std::invalid_argument("element not in the image of the embedding");
    };
    return f_apply(back, t);
  };
  F.normal = PraeDilator::Normal{
      [](std::size_t, std::size_t m) { return Term::tuple({Term::nat(m), Term::bot()}); }};
  F.lift_order = [](const Order& x) { return F_order(x); };
  F.lift_map = f_apply;
  return F;
}

Term eta(const Order& X, const Term& e) {
  FinSubset a{e.kids()[0].kids()};
  return f_apply([&a](const Term& pos) { return en(a, pos.value()); }, e.kids()[1]);
}

Term eta_inv(const Term& t) {
  if (t.is_bot()) return Term::tuple({Term::tuple({}), Term::bot()});
  const Term& x = t.kids()[0];
  const Term& y = t.kids()[1];
  if (y.is_bot()) {
    return Term::tuple({Term::tuple({x}), Term::tuple({Term::nat(0), Term::bot()})});
  }
  return Term::tuple({Term::tuple({y, x}), Term::tuple({Term::nat(1), Term::nat(0)})});
}

Term square_embed(const Term& t) {
  if (t.is_bot()) return Term::tuple({Term::bot(), Term::bot()});
  return t;
}

Ordinal F_val(const Order& X, const Term& t) {
  auto d = F_order(X).denote(t);
  if (!d) throw std::invalid_argument("base order carries no denotation");
  return *d;
}

}  // namespace dilex
