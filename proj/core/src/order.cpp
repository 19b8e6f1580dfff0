#include "dilex/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilex {

std::optional<Ordinal> Order::Impl::denote(const Term&) const { return std::nullopt; }

Order::Order(std::shared_ptr<Impl> impl) : state_(std::make_shared<State>()) {
  state_->impl = std::move(impl);
}

std::strong_ordering Order::compare(const Term& a, const Term& b) const {
  return state_->impl->compare(a, b);
}

void Order::extend(std::size_t want) const {
  std::lock_guard<std::mutex> lock(state_->mutex);
  const auto total = state_->impl->size();
  std::size_t idle_grades = 0;
  while (state_->prefix.size() < want) {
    if (total && state_->prefix.size() >= *total) return;
    std::vector<Term> batch = state_->impl->grade(state_->next_grade++);
    std::sort(batch.begin(), batch.end(), [&](const Term& a, const Term& b) {
      return state_->impl->compare(a, b) == std::strong_ordering::less;
    });
    state_->prefix.insert(state_->prefix.end(), batch.begin(), batch.end());
    idle_grades = batch.empty() ? idle_grades + 1 : 0;
    if (idle_grades > 100000) {
      throw std::logic_error("order enumeration stalled: " + state_->impl->name());
    }
  }
}

Term Order::at(std::size_t idx) const {
  extend(idx + 1);
  std::lock_guard<std::mutex> lock(state_->mutex);
  if (idx >= state_->prefix.size()) {
    throw std::out_of_range("enumeration index past the end of " + state_->impl->name());
  }
  return state_->prefix[idx];
}

std::vector<Term> Order::first(std::size_t k) const {
  extend(k);
  std::lock_guard<std::mutex> lock(state_->mutex);
  std::size_t n = std::min(k, state_->prefix.size());
  return {state_->prefix.begin(), state_->prefix.begin() + static_cast<std::ptrdiff_t>(n)};
}

std::optional<std::size_t> Order::index_of(const Term& t, std::size_t search_bound) const {
  std::vector<Term> prefix = first(search_bound);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == t) return i;
  }
  return std::nullopt;
}

std::vector<Term> Order::grade_sorted(std::size_t g) const {
  std::vector<Term> batch = state_->impl->grade(g);
  std::sort(batch.begin(), batch.end(), [&](const Term& a, const Term& b) {
    return state_->impl->compare(a, b) == std::strong_ordering::less;
  });
  return batch;
}

OrderEmbedding make_embedding(std::size_t dom, std::size_t cod, std::vector<std::size_t> values) {
  if (values.size() != dom) throw std::invalid_argument("embedding length must equal domain size");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= cod) throw std::invalid_argument("embedding value out of range");
    if (i > 0 && values[i] <= values[i - 1]) {
      throw std::invalid_argument("embedding values must be strictly increasing");
    }
  }
  return OrderEmbedding{dom, cod, std::move(values)};
}

OrderEmbedding identity_embedding(std::size_t n) {
  std::vector<std::size_t> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = i;
  return OrderEmbedding{n, n, std::move(values)};
}

OrderEmbedding compose(const OrderEmbedding& f, const OrderEmbedding& g) {
  if (f.cod != g.dom) throw std::invalid_argument("embedding composition mismatch");
  std::vector<std::size_t> values(f.dom);
  for (std::size_t i = 0; i < f.dom; ++i) values[i] = g(f(i));
  return OrderEmbedding{f.dom, g.cod, std::move(values)};
}

std::vector<OrderEmbedding> enumerate_all_embeddings(std::size_t m, std::size_t n) {
  std::vector<OrderEmbedding> out;
  if (m > n) return out;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    out.push_back(OrderEmbedding{m, n, pick});
    // next combination
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (pick[i] < n - (m - i)) {
        ++pick[i];
        for (std::size_t j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
    if (m == 0) return out;
  }
}

FinSubset make_subset(const Order& ambient, std::vector<Term> elements) {
  std::sort(elements.begin(), elements.end(),
            [&](const Term& a, const Term& b) { return ambient.less(a, b); });
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    if (ambient.compare(elements[i], elements[i + 1]) == std::strong_ordering::equal) {
      throw std::invalid_argument("subset elements must be distinct");
    }
  }
  return FinSubset{std::move(elements)};
}

FinSubset union_subsets(const Order& ambient, const FinSubset& a, const FinSubset& b) {
  std::vector<Term> merged;
  std::size_t i = 0, j = 0;
  while (i < a.elements.size() || j < b.elements.size()) {
    if (i == a.elements.size()) {
      merged.push_back(b.elements[j++]);
    } else if (j == b.elements.size()) {
      merged.push_back(a.elements[i++]);
    } else {
      auto c = ambient.compare(a.elements[i], b.elements[j]);
      if (c == std::strong_ordering::less) {
        merged.push_back(a.elements[i++]);
      } else if (c == std::strong_ordering::greater) {
        merged.push_back(b.elements[j++]);
      } else {
        merged.push_back(a.elements[i++]);
        ++j;
      }
    }
  }
  return FinSubset{std::move(merged)};
}

Term en(const FinSubset& a, std::size_t i) {
  if (i >= a.elements.size()) throw std::out_of_range("subset index out of range");
  return a.elements[i];
}

OrderEmbedding inclusion_embedding(const Order& ambient, const FinSubset& sub,
                                   const FinSubset& super) {
  std::vector<std::size_t> values;
  values.reserve(sub.elements.size());
  for (const Term& x : sub.elements) {
    bool found = false;
    for (std::size_t j = 0; j < super.elements.size(); ++j) {
      if (ambient.compare(x, super.elements[j]) == std::strong_ordering::equal) {
        values.push_back(j);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("inclusion target misses a subset element");
  }
  return make_embedding(sub.elements.size(), super.elements.size(), std::move(values));
}

OrderEmbedding restrict_map(const Order& ambient, const FinSubset& a, const FinSubset& b,
                            const std::vector<Term>& images) {
  if (images.size() != a.elements.size()) {
    throw std::invalid_argument("image list length must equal subset size");
  }
  FinSubset image_set = make_subset(ambient, images);  // rejects duplicates
  for (std::size_t i = 0; i + 1 < images.size(); ++i) {
    if (!ambient.less(images[i], images[i + 1])) {
      throw std::invalid_argument("map between subsets is not order-preserving");
    }
  }
  return inclusion_embedding(ambient, image_set, b);
}

std::string OrderCheckReport::summary() const {
  if (ok()) return "pass (" + std::to_string(checks) + " checks)";
  return "fail: " + failures.front().law + " [" + failures.front().witness + "] (" +
         std::to_string(failures.size()) + " violations, " + std::to_string(checks) + " checks)";
}

OrderCheckReport order_iso_check(const Order& X, const Order& Y,
                                 const std::function<Term(const Term&)>& h, std::size_t bound,
                                 bool require_onto) {
  OrderCheckReport report;
  std::vector<Term> xs = X.first(bound);
  std::vector<Term> hs;
  hs.reserve(xs.size());
  for (const Term& x : xs) hs.push_back(h(x));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      ++report.checks;
      if (Y.compare(hs[i], hs[j]) != X.compare(xs[i], xs[j])) {
        report.failures.push_back({"order-preservation", X.print(xs[i]) + " vs " + X.print(xs[j])});
      }
    }
  }
  if (require_onto) {
    for (const Term& y : Y.first(bound)) {
      ++report.checks;
      bool hit = std::any_of(hs.begin(), hs.end(), [&](const Term& v) {
        return Y.compare(v, y) == std::strong_ordering::equal;
      });
      if (!hit) report.failures.push_back({"surjectivity", Y.print(y)});
    }
  }
  return report;
}

Term ord_to_term(const Ordinal& a) {
  std::vector<Term> kids;
  kids.reserve(a.parts().size());
  for (const auto& part : a.parts()) {
    kids.push_back(Term::tuple({ord_to_term(part.exponent), Term::nat(part.coeff)}));
  }
  return Term::tuple(std::move(kids));
}

Ordinal term_to_ord(const Term& t) {
  std::vector<Ordinal::Part> parts;
  for (const Term& kid : t.kids()) {
    if (!kid.is_tuple() || kid.kids().size() != 2) {
      throw std::invalid_argument("malformed ordinal term");
    }
    parts.push_back({term_to_ord(kid.kids()[0]), kid.kids()[1].value()});
  }
  return Ordinal::from_parts(std::move(parts));
}

std::size_t ordinal_weight(const Ordinal& a) {
  std::size_t w = 0;
  for (const auto& part : a.parts()) {
    w += 1 + ordinal_weight(part.exponent) + static_cast<std::size_t>(part.coeff);
  }
  return w;
}

namespace {

// bound = nullptr enumerates freely; otherwise prefixes >= *bound are
// pruned (extensions only append smaller terms at lower exponents, so a
// pruned prefix cannot recover, and every kept prefix is checked again on
// emission).
void weight_dfs(const std::vector<Ordinal>& exps, const Ordinal* bound, std::size_t start,
                std::size_t remaining, std::vector<Ordinal::Part>& parts,
                std::vector<Ordinal>& out) {
  for (std::size_t j = start; j < exps.size(); ++j) {
    std::size_t base = 1 + ordinal_weight(exps[j]);
    for (std::uint64_t c = 1; base + c <= remaining; ++c) {
      parts.push_back({exps[j], c});
      Ordinal prefix = Ordinal::from_parts(parts);
      if (bound && parts.size() == 1 &&
          cmp(prefix, *bound) != std::strong_ordering::less) {
        parts.pop_back();
        break;  // larger coefficients only grow the prefix
      }
      if (!bound || cmp(prefix, *bound) == std::strong_ordering::less) {
        out.push_back(prefix);
      }
      weight_dfs(exps, bound, j + 1, remaining - base - static_cast<std::size_t>(c), parts, out);
      parts.pop_back();
    }
  }
}

std::vector<Ordinal> ordinals_up_to_weight_impl(std::size_t w, const Ordinal* bound) {
  if (bound && bound->is_zero()) return {};
  std::vector<Ordinal> exps;
  if (w >= 2) {
    if (bound) {
      // only exponents up to the bound's leading exponent can stay below it
      Ordinal exp_bound = add(bound->parts().front().exponent, Ordinal(1));
      exps = ordinals_up_to_weight_impl(w - 2, &exp_bound);
    } else {
      exps = ordinals_up_to_weight_impl(w - 2, nullptr);
    }
  }
  // exponents must be tried in decreasing ordinal value
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) {
    return cmp(a, b) == std::strong_ordering::greater;
  });
  std::vector<Ordinal> out;
  if (!bound || !bound->is_zero()) out.emplace_back();
  std::vector<Ordinal::Part> parts;
  weight_dfs(exps, bound, 0, w, parts, out);
  std::sort(out.begin(), out.end(),
            [](const Ordinal& a, const Ordinal& b) { return cmp(a, b) == std::strong_ordering::less; });
  return out;
}

}  // namespace

std::vector<Ordinal> ordinals_up_to_weight(std::size_t w) {
  return ordinals_up_to_weight_impl(w, nullptr);
}

namespace {

class FinOrderImpl : public Order::Impl {
 public:
  explicit FinOrderImpl(std::size_t n) : n_(n) {}
  std::string name() const override { return "fin(" + std::to_string(n_) + ")"; }
  bool contains(const Term& t) const override { return t.is_nat() && t.value() < n_; }
  std::strong_ordering compare(const Term& a, const Term& b) const override {
    return a.value() <=> b.value();
  }
  std::vector<Term> grade(std::size_t g) const override {
    if (g < n_) return {Term::nat(g)};
    return {};
  }
  std::optional<std::size_t> size() const override { return n_; }
  std::optional<Ordinal> denote(const Term& t) const override { return Ordinal(t.value()); }
  std::string print(const Term& t) const override { return std::to_string(t.value()); }

 private:
  std::size_t n_;
};

class OrdinalOrderImpl : public Order::Impl {
 public:
  explicit OrdinalOrderImpl(Ordinal bound) : bound_(std::move(bound)) {}
  std::string name() const override { return "ordinal(" + to_string(bound_) + ")"; }
  bool contains(const Term& t) const override {
    try {
      return cmp(term_to_ord(t), bound_) == std::strong_ordering::less;
    } catch (const std::exception&) {
      return false;
    }
  }
  std::strong_ordering compare(const Term& a, const Term& b) const override {
    return cmp(term_to_ord(a), term_to_ord(b));
  }
  std::vector<Term> grade(std::size_t g) const override {
    std::vector<Term> out;
    for (const Ordinal& a : ordinals_up_to_weight_impl(g, &bound_)) {
      if (ordinal_weight(a) == g) out.push_back(ord_to_term(a));
    }
    return out;
  }
  std::optional<std::size_t> size() const override {
    if (bound_.is_finite()) return static_cast<std::size_t>(bound_.finite_value());
    return std::nullopt;
  }
  std::optional<Ordinal> denote(const Term& t) const override { return term_to_ord(t); }
  std::string print(const Term& t) const override { return to_string(term_to_ord(t)); }

 private:
  Ordinal bound_;
};

class LiftOrderImpl : public Order::Impl {
 public:
  explicit LiftOrderImpl(Order x) : x_(std::move(x)) {}
  std::string name() const override { return "lift(" + x_.name() + ")"; }
  bool contains(const Term& t) const override { return t.is_bot() || x_.contains(t); }
  std::strong_ordering compare(const Term& a, const Term& b) const override {
    if (a.is_bot() && b.is_bot()) return std::strong_ordering::equal;
    if (a.is_bot()) return std::strong_ordering::less;
    if (b.is_bot()) return std::strong_ordering::greater;
    return x_.compare(a, b);
  }
  std::vector<Term> grade(std::size_t g) const override {
    if (g == 0) return {Term::bot()};
    return x_.grade_sorted(g - 1);
  }
  std::optional<std::size_t> size() const override {
    if (auto n = x_.size()) return *n + 1;
    return std::nullopt;
  }
  std::optional<Ordinal> denote(const Term& t) const override {
    if (t.is_bot()) return Ordinal(0);
    if (auto d = x_.denote(t)) return add(Ordinal(1), *d);
    return std::nullopt;
  }
  std::string print(const Term& t) const override { return t.is_bot() ? "_" : x_.print(t); }

 private:
  Order x_;
};

class LexSquareImpl : public Order::Impl {
 public:
  explicit LexSquareImpl(Order x) : lift_(make_lift(x)) {}
  std::string name() const override { return "lexsq of " + lift_.name(); }
  bool contains(const Term& t) const override {
    return t.is_tuple() && t.kids().size() == 2 && lift_.contains(t.kids()[0]) &&
           lift_.contains(t.kids()[1]);
  }
  std::strong_ordering compare(const Term& a, const Term& b) const override {
    if (auto c = lift_.compare(a.kids()[0], b.kids()[0]); c != std::strong_ordering::equal) {
      return c;
    }
    return lift_.compare(a.kids()[1], b.kids()[1]);
  }
  std::vector<Term> grade(std::size_t g) const override {
    std::vector<Term> out;
    for (std::size_t i = 0; i <= g; ++i) {
      for (const Term& u : lift_.grade_sorted(i)) {
        for (const Term& v : lift_.grade_sorted(g - i)) {
          out.push_back(Term::tuple({u, v}));
        }
      }
    }
    return out;
  }
  std::optional<std::size_t> size() const override {
    if (auto n = lift_.size()) return *n * *n;
    return std::nullopt;
  }
  std::string print(const Term& t) const override {
    return "(" + lift_.print(t.kids()[0]) + "," + lift_.print(t.kids()[1]) + ")";
  }

 private:
  Order lift_;
};

class Pow2OrderImpl : public Order::Impl {
 public:
  explicit Pow2OrderImpl(Order x) : x_(std::move(x)) {}
  std::string name() const override { return "pow2(" + x_.name() + ")"; }
  bool contains(const Term& t) const override {
    if (!t.is_tuple()) return false;
    const auto& xs = t.kids();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!x_.contains(xs[i])) return false;
      if (i > 0 && !x_.less(xs[i], xs[i - 1])) return false;  // strictly descending
    }
    return true;
  }
  std::strong_ordering compare(const Term& a, const Term& b) const override {
    const auto& xs = a.kids();
    const auto& ys = b.kids();
    for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
      if (auto c = x_.compare(xs[i], ys[i]); c != std::strong_ordering::equal) return c;
    }
    return xs.size() <=> ys.size();
  }
  std::vector<Term> grade(std::size_t g) const override {
    // index sets with sum of (index+1) equal to g
    std::vector<Term> out;
    std::vector<std::size_t> chosen;
    index_dfs(0, g, chosen, out);
    return out;
  }
  std::optional<std::size_t> size() const override {
    if (auto n = x_.size(); n && *n < 63) return std::size_t{1} << *n;
    return std::nullopt;
  }
  std::optional<Ordinal> denote(const Term& t) const override {
    Ordinal sum;
    for (const Term& x : t.kids()) {
      auto d = x_.denote(x);
      if (!d) return std::nullopt;
      sum = add(sum, two_pow(*d));
    }
    return sum;
  }
  std::string print(const Term& t) const override {
    std::string out = "<";
    for (std::size_t i = 0; i < t.kids().size(); ++i) {
      if (i > 0) out += ",";
      out += x_.print(t.kids()[i]);
    }
    return out + ">";
  }

 private:
  void index_dfs(std::size_t next, std::size_t remaining, std::vector<std::size_t>& chosen,
                 std::vector<Term>& out) const {
    if (remaining == 0) {
      std::vector<Term> elems;
      elems.reserve(chosen.size());
      for (std::size_t idx : chosen) elems.push_back(x_.at(idx));
      std::sort(elems.begin(), elems.end(),
                [&](const Term& a, const Term& b) { return x_.less(b, a); });
      out.push_back(Term::tuple(std::move(elems)));
      return;
    }
    auto n = x_.size();
    for (std::size_t idx = next; idx + 1 <= remaining; ++idx) {
      if (n && idx >= *n) break;
      chosen.push_back(idx);
      index_dfs(idx + 1, remaining - (idx + 1), chosen, out);
      chosen.pop_back();
    }
  }

  Order x_;
};

class ReverseNaturalsImpl : public Order::Impl {
 public:
  std::string name() const override { return "reverse-naturals"; }
  bool contains(const Term& t) const override { return t.is_nat(); }
  std::strong_ordering compare(const Term& a, const Term& b) const override {
    return b.value() <=> a.value();  // k denotes -k
  }
  std::vector<Term> grade(std::size_t g) const override { return {Term::nat(g)}; }
  std::string print(const Term& t) const override { return "-" + std::to_string(t.value()); }
};

void require_no_bot(const Order& x) {
  if (x.contains(Term::bot())) {
    throw std::invalid_argument("lifted order must not contain the bottom marker");
  }
}

}  // namespace

Order make_fin(std::size_t n) { return Order(std::make_shared<FinOrderImpl>(n)); }

Order make_ordinal_order(const Ordinal& bound) {
  return Order(std::make_shared<OrdinalOrderImpl>(bound));
}

Order make_lift(const Order& x) {
  require_no_bot(x);
  return Order(std::make_shared<LiftOrderImpl>(x));
}

Order make_lex_square(const Order& x) {
  require_no_bot(x);
  return Order(std::make_shared<LexSquareImpl>(x));
}

Order make_pow2(const Order& x) { return Order(std::make_shared<Pow2OrderImpl>(x)); }

Order make_reverse_naturals() { return Order(std::make_shared<ReverseNaturalsImpl>()); }

}  // namespace dilex
