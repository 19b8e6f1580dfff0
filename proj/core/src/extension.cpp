#include "dilex/extension.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dilex {

namespace {

bool has_full_support(const PraeDilator& T, std::size_t m, const Term& sigma) {
  std::vector<std::size_t> s = T.supp(m, sigma);
  if (s.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (s[i] != i) return false;
  }
  return true;
}

std::optional<std::size_t> binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t next = r * (n - i);
    if (next / (n - i) != r) return std::nullopt;  // overflow
    r = next / (i + 1);
  }
  return r;
}

class ExtOrderImpl : public Order::Impl {
 public:
  ExtOrderImpl(PraeDilator T, Order X) : T_(std::move(T)), X_(std::move(X)) {
    if (T_.lift_order) lifted_ = T_.lift_order(X_);
  }

  std::string name() const override { return "D^" + T_.name + "(" + X_.name() + ")"; }

  bool contains(const Term& t) const override {
    if (!t.is_tuple() || t.kids().size() != 2 || !t.kids()[0].is_tuple()) return false;
    const auto& a = t.kids()[0].kids();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!X_.contains(a[i])) return false;
      if (i > 0 && !X_.less(a[i - 1], a[i])) return false;
    }
    const Term& sigma = t.kids()[1];
    Order tn = T_.at(a.size());
    return tn.contains(sigma) && has_full_support(T_, a.size(), sigma);
  }

  std::strong_ordering compare(const Term& s, const Term& t) const override {
    FinSubset a0{s.kids()[0].kids()};
    FinSubset a1{t.kids()[0].kids()};
    FinSubset c = union_subsets(X_, a0, a1);
    OrderEmbedding i0 = inclusion_embedding(X_, a0, c);
    OrderEmbedding i1 = inclusion_embedding(X_, a1, c);
    return T_.at(c.elements.size()).compare(T_.map(i0, s.kids()[1]), T_.map(i1, t.kids()[1]));
  }

  std::vector<Term> grade(std::size_t g) const override {
    std::vector<Term> out;
    std::vector<std::size_t> chosen;
    subset_dfs(0, 0, g, chosen, out);
    return out;
  }

  std::optional<std::size_t> size() const override {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!size_done_) {
      size_done_ = true;
      size_ = compute_size();
    }
    return size_;
  }

  std::optional<Ordinal> denote(const Term& t) const override {
    if (!lifted_ || !T_.lift_map) return std::nullopt;
    FinSubset a{t.kids()[0].kids()};
    auto h = [&a](const Term& pos) { return en(a, pos.value()); };
    return lifted_->denote(T_.lift_map(h, t.kids()[1]));
  }

  std::string print(const Term& t) const override {
    const auto& a = t.kids()[0].kids();
    std::string out = "<{";
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i > 0) out += ",";
      out += X_.print(a[i]);
    }
    return out + "}," + T_.at(a.size()).print(t.kids()[1]) + ">";
  }

 private:
  // The idx-th full-support element of T(m) in enumeration order.
  std::optional<Term> fs_element(std::size_t m, std::size_t idx) const {
    std::lock_guard<std::mutex> lock(mutex_);
    FsCache& cache = fs_[m];
    if (!cache.order) cache.order = T_.at(m);
    std::size_t misses = 0;
    while (cache.found.size() <= idx && !cache.exhausted) {
      if (auto total = cache.order->size(); total && cache.scanned >= *total) {
        cache.exhausted = true;
        break;
      }
      Term t = cache.order->at(cache.scanned++);
      if (has_full_support(T_, m, t)) {
        cache.found.push_back(std::move(t));
        misses = 0;
      } else if (++misses > 500000) {
        throw std::logic_error("full-support scan stalled in " + name());
      }
    }
    if (idx < cache.found.size()) return cache.found[idx];
    return std::nullopt;
  }

  // Enumerates index sets of weight sum(idx+1) <= g; each contributes the
  // element whose full-support index makes the total grade exactly g.
  void subset_dfs(std::size_t next, std::size_t weight, std::size_t g,
                  std::vector<std::size_t>& chosen, std::vector<Term>& out) const {
    if (auto sigma = fs_element(chosen.size(), g - weight)) {
      std::vector<Term> elems;
      elems.reserve(chosen.size());
      for (std::size_t idx : chosen) elems.push_back(X_.at(idx));
      std::sort(elems.begin(), elems.end(),
                [&](const Term& a, const Term& b) { return X_.less(a, b); });
      out.push_back(Term::tuple({Term::tuple(std::move(elems)), std::move(*sigma)}));
    }
    auto n = X_.size();
    for (std::size_t idx = next; weight + idx + 1 <= g; ++idx) {
      if (n && idx >= *n) break;
      chosen.push_back(idx);
      subset_dfs(idx + 1, weight + idx + 1, g, chosen, out);
      chosen.pop_back();
    }
  }

  std::optional<std::size_t> compute_size() const {
    auto n = X_.size();
    if (!n) return std::nullopt;
    std::size_t total = 0;
    for (std::size_t m = 0; m <= *n; ++m) {
      Order tm = T_.at(m);
      auto tm_size = tm.size();
      if (!tm_size) return std::nullopt;
      std::size_t fs_count = 0;
      for (std::size_t i = 0; i < *tm_size; ++i) {
        if (has_full_support(T_, m, tm.at(i))) ++fs_count;
      }
      auto ways = binomial(*n, m);
      if (!ways) return std::nullopt;
      total += *ways * fs_count;
    }
    return total;
  }

  struct FsCache {
    std::optional<Order> order;
    std::vector<Term> found;
    std::size_t scanned = 0;
    bool exhausted = false;
  };

  PraeDilator T_;
  Order X_;
  std::optional<Order> lifted_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, FsCache> fs_;
  mutable bool size_done_ = false;
  mutable std::optional<std::size_t> size_;
};

}  // namespace

Term make_ext_element(const PraeDilator& T, const Order& X, const FinSubset& a, Term sigma) {
  for (const Term& x : a.elements) {
    if (!X.contains(x)) throw std::invalid_argument("support element is not in the base order");
  }
  if (!T.at(a.elements.size()).contains(sigma)) {
    throw std::invalid_argument("second component is not an element of T(|a|)");
  }
  if (!has_full_support(T, a.elements.size(), sigma)) {
    throw std::invalid_argument("second component does not have full support");
  }
  return Term::tuple({Term::tuple(a.elements), std::move(sigma)});
}

FinSubset ext_support(const Order& X, const Term& e) {
  return make_subset(X, e.kids()[0].kids());
}

const Term& ext_sigma(const Term& e) { return e.kids()[1]; }

Order ext_order(const PraeDilator& T, const Order& X) {
  return Order(std::make_shared<ExtOrderImpl>(T, X));
}

Term ext_map(const Order& Y, const std::function<Term(const Term&)>& h, const Term& e) {
  std::vector<Term> images;
  images.reserve(e.kids()[0].kids().size());
  for (const Term& x : e.kids()[0].kids()) images.push_back(h(x));
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!Y.contains(images[i])) throw std::invalid_argument("image lies outside the target order");
    if (i > 0 && !Y.less(images[i - 1], images[i])) {
      throw std::invalid_argument("support renaming is not strictly increasing");
    }
  }
  return Term::tuple({Term::tuple(std::move(images)), e.kids()[1]});
}

Term ext_mu(const PraeDilator& T, const Order& X, const Term& x) {
  if (!T.normal) throw std::invalid_argument(T.name + " carries no normality data");
  if (!X.contains(x)) throw std::invalid_argument("argument is not in the base order");
  return Term::tuple({Term::tuple({x}), T.normal->mu(1, 0)});
}

Term ext_to_general(const PraeDilator& T, const Order& X, const Term& e) {
  if (!T.lift_map) throw std::invalid_argument(T.name + " has no general action");
  FinSubset a{e.kids()[0].kids()};
  auto h = [&a](const Term& pos) { return en(a, pos.value()); };
  (void)X;
  return T.lift_map(h, e.kids()[1]);
}

ExtNormalForm normalize_full_support(const PraeDilator& S, std::size_t n, const Term& s,
                                     std::size_t search_bound) {
  std::vector<std::size_t> positions = S.supp(n, s);
  OrderEmbedding emb = make_embedding(positions.size(), n, positions);
  if (S.unmap) return {std::move(positions), S.unmap(emb, s)};
  auto tau = reconstruct_from_support(S, n, s, search_bound);
  if (!tau) {
    throw std::invalid_argument("no full-support representative found within the search bound");
  }
  return {std::move(positions), std::move(*tau)};
}

PraeDilator compose_dilators(const PraeDilator& T, const PraeDilator& S) {
  PraeDilator C;
  C.name = T.name + " o " + S.name;
  C.at = [T, S](std::size_t n) { return ext_order(T, S.at(n)); };
  C.map = [S](const OrderEmbedding& f, const Term& e) {
    Order target = S.at(f.cod);
    return ext_map(target, [&](const Term& s) { return S.map(f, s); }, e);
  };
  C.supp = [S](std::size_t n, const Term& e) {
    std::vector<std::size_t> out;
    for (const Term& s : e.kids()[0].kids()) {
      for (std::size_t v : S.supp(n, s)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  if (S.unmap) {
    C.unmap = [S](const OrderEmbedding& f, const Term& e) {
      Order target = S.at(f.dom);
      std::vector<Term> pulled;
      pulled.reserve(e.kids()[0].kids().size());
      for (const Term& s : e.kids()[0].kids()) pulled.push_back(S.unmap(f, s));
      return Term::tuple({Term::tuple(std::move(pulled)), e.kids()[1]});
    };
  }
  if (T.normal && S.normal) {
    auto mu_t = T.normal->mu;
    auto mu_s = S.normal->mu;
    C.normal = PraeDilator::Normal{[T, S, mu_s](std::size_t n, std::size_t m) {
      return ext_mu(T, S.at(n), mu_s(n, m));
    }};
  }
  return C;
}

Term zeta_forward(const PraeDilator& T, const PraeDilator& S, const Order& X, const Term& e) {
  const auto& a = e.kids()[0].kids();  // elements of D^S(X)
  FinSubset c;
  for (const Term& inner : a) {
    c = union_subsets(X, c, FinSubset{inner.kids()[0].kids()});
  }
  Order sc = S.at(c.elements.size());
  std::vector<Term> pushed;
  pushed.reserve(a.size());
  for (const Term& inner : a) {
    FinSubset b{inner.kids()[0].kids()};
    OrderEmbedding emb = inclusion_embedding(X, b, c);
    pushed.push_back(S.map(emb, inner.kids()[1]));
  }
  for (std::size_t i = 0; i + 1 < pushed.size(); ++i) {
    if (!sc.less(pushed[i], pushed[i + 1])) {
      throw std::logic_error("zeta: pushed supports are not strictly increasing");
    }
  }
  Term rho = Term::tuple({Term::tuple(std::move(pushed)), e.kids()[1]});
  return Term::tuple({Term::tuple(c.elements), std::move(rho)});
}

Term zeta_backward(const PraeDilator& T, const PraeDilator& S, const Order& X, const Term& e) {
  (void)T;
  FinSubset c{e.kids()[0].kids()};
  const Term& rho = e.kids()[1];
  std::vector<Term> inner;
  inner.reserve(rho.kids()[0].kids().size());
  for (const Term& s : rho.kids()[0].kids()) {
    ExtNormalForm nf = normalize_full_support(S, c.elements.size(), s);
    std::vector<Term> b;
    b.reserve(nf.positions.size());
    for (std::size_t p : nf.positions) b.push_back(en(c, p));
    inner.push_back(Term::tuple({Term::tuple(std::move(b)), std::move(nf.tau)}));
  }
  return Term::tuple({Term::tuple(std::move(inner)), rho.kids()[1]});
}

Term dext_xi(const PraeDilator& S, const std::function<Term(std::size_t, const Term&)>& xi,
             const Order& X, const Term& e) {
  (void)X;
  std::size_t n = e.kids()[0].kids().size();
  Term s = xi(n, e.kids()[1]);
  ExtNormalForm nf = normalize_full_support(S, n, s);
  std::vector<Term> b;
  b.reserve(nf.positions.size());
  for (std::size_t p : nf.positions) b.push_back(e.kids()[0].kids()[p]);
  return Term::tuple({Term::tuple(std::move(b)), std::move(nf.tau)});
}

}  // namespace dilex
