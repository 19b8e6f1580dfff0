#include "dilex/praedilator.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilex {

namespace {

bool is_full_support(const PraeDilator& T, std::size_t m, const Term& sigma) {
  std::vector<std::size_t> s = T.supp(m, sigma);
  if (s.size() != m) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (s[i] != i) return false;
  }
  return true;
}

std::string witness(const PraeDilator& T, std::size_t n, const Term& sigma) {
  return T.name + "(" + std::to_string(n) + "): " + sigma.repr();
}

std::string embedding_repr(const OrderEmbedding& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(f.values[i]);
  }
  return out + "):" + std::to_string(f.dom) + "->" + std::to_string(f.cod);
}

}  // namespace

std::vector<Term> full_support_elements(const PraeDilator& T, std::size_t m, std::size_t count,
                                        std::size_t scan_bound) {
  Order order = T.at(m);
  std::vector<Term> out;
  for (std::size_t i = 0; out.size() < count && i < scan_bound; ++i) {
    if (auto total = order.size(); total && i >= *total) break;
    Term sigma = order.at(i);
    if (is_full_support(T, m, sigma)) out.push_back(std::move(sigma));
  }
  return out;
}

std::optional<Term> reconstruct_from_support(const PraeDilator& T, std::size_t n,
                                             const Term& sigma, std::size_t search_bound) {
  std::vector<std::size_t> s = T.supp(n, sigma);
  OrderEmbedding en = make_embedding(s.size(), n, s);
  if (T.unmap) {
    Term tau = T.unmap(en, sigma);
    if (T.map(en, tau) == sigma) return tau;
    return std::nullopt;
  }
  Order small = T.at(s.size());
  for (std::size_t i = 0; i < search_bound; ++i) {
    if (auto total = small.size(); total && i >= *total) break;
    Term tau = small.at(i);
    if (T.map(en, tau) == sigma) return tau;
  }
  return std::nullopt;
}

OrderCheckReport validate_praedilator(const PraeDilator& T, std::size_t size_bound,
                                      std::size_t elem_bound) {
  OrderCheckReport report;
  for (std::size_t n = 0; n <= size_bound; ++n) {
    Order order_n = T.at(n);
    std::vector<Term> elems = order_n.first(elem_bound);

    // identity law
    OrderEmbedding id = identity_embedding(n);
    for (const Term& sigma : elems) {
      ++report.checks;
      if (!(T.map(id, sigma) == sigma)) {
        report.failures.push_back({"functor-identity", witness(T, n, sigma)});
      }
    }

    // support condition: sigma lies in the image of T(en_supp)
    for (const Term& sigma : elems) {
      ++report.checks;
      if (!reconstruct_from_support(T, n, sigma, elem_bound)) {
        report.failures.push_back({"support-condition", witness(T, n, sigma)});
      }
    }

    for (std::size_t m = 0; m <= n; ++m) {
      Order order_m = T.at(m);
      std::vector<Term> low = order_m.first(elem_bound);
      for (const OrderEmbedding& f : enumerate_all_embeddings(m, n)) {
        // strict order preservation
        std::vector<Term> mapped;
        mapped.reserve(low.size());
        for (const Term& sigma : low) mapped.push_back(T.map(f, sigma));
        for (std::size_t i = 0; i < low.size(); ++i) {
          for (std::size_t j = i + 1; j < low.size(); ++j) {
            ++report.checks;
            if (order_n.compare(mapped[i], mapped[j]) != order_m.compare(low[i], low[j])) {
              report.failures.push_back(
                  {"map-order-preservation",
                   embedding_repr(f) + " on " + low[i].repr() + " vs " + low[j].repr()});
            }
          }
        }
        // supp naturality
        for (std::size_t i = 0; i < low.size(); ++i) {
          ++report.checks;
          std::vector<std::size_t> expect = T.supp(m, low[i]);
          for (std::size_t& v : expect) v = f(v);
          if (T.supp(n, mapped[i]) != expect) {
            report.failures.push_back(
                {"supp-naturality", embedding_repr(f) + " on " + low[i].repr()});
          }
        }
        // composition law against every g: n -> p
        for (std::size_t p = n; p <= size_bound; ++p) {
          for (const OrderEmbedding& g : enumerate_all_embeddings(n, p)) {
            OrderEmbedding gf = compose(f, g);
            for (std::size_t i = 0; i < low.size(); ++i) {
              ++report.checks;
              if (!(T.map(gf, low[i]) == T.map(g, mapped[i]))) {
                report.failures.push_back(
                    {"functor-composition",
                     embedding_repr(f) + ";" + embedding_repr(g) + " on " + low[i].repr()});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

OrderCheckReport validate_normal(const PraeDilator& T, std::size_t size_bound,
                                 std::size_t elem_bound) {
  if (!T.normal) throw std::invalid_argument(T.name + " carries no normality data");
  const auto& mu = T.normal->mu;
  OrderCheckReport report;

  // forced fact: supp_1(mu_1(0)) = {0}
  ++report.checks;
  if (T.supp(1, mu(1, 0)) != std::vector<std::size_t>{0}) {
    report.failures.push_back({"mu-support", witness(T, 1, mu(1, 0))});
  }

  for (std::size_t n = 1; n <= size_bound; ++n) {
    Order order_n = T.at(n);
    // mu_n is an embedding n -> T(n)
    for (std::size_t m = 0; m + 1 < n; ++m) {
      ++report.checks;
      if (!order_n.less(mu(n, m), mu(n, m + 1))) {
        report.failures.push_back({"mu-strictness", witness(T, n, mu(n, m))});
      }
    }
    // naturality of mu
    for (std::size_t m = 1; m <= n; ++m) {
      for (const OrderEmbedding& f : enumerate_all_embeddings(m, n)) {
        for (std::size_t i = 0; i < m; ++i) {
          ++report.checks;
          if (!(T.map(f, mu(m, i)) == mu(n, f(i)))) {
            report.failures.push_back({"mu-naturality", embedding_repr(f) + " at " +
                                                            std::to_string(i)});
          }
        }
      }
    }
    // the characterizing biconditional
    std::vector<Term> elems = order_n.first(elem_bound);
    for (std::size_t m = 0; m < n; ++m) {
      Term bound = mu(n, m);
      for (const Term& sigma : elems) {
        ++report.checks;
        std::vector<std::size_t> s = T.supp(n, sigma);
        bool below = order_n.less(sigma, bound);
        bool contained = std::all_of(s.begin(), s.end(), [&](std::size_t v) { return v < m; });
        if (below != contained) {
          report.failures.push_back(
              {"mu-biconditional", witness(T, n, sigma) + " vs mu(" + std::to_string(n) + "," +
                                       std::to_string(m) + ")"});
        }
      }
    }
  }
  return report;
}

namespace {

PraeDilator identity_dilator() {
  PraeDilator T;
  T.name = "identity";
  T.at = [](std::size_t n) { return make_fin(n); };
  T.map = [](const OrderEmbedding& f, const Term& sigma) { return Term::nat(f(sigma.value())); };
  T.supp = [](std::size_t, const Term& sigma) {
    return std::vector<std::size_t>{static_cast<std::size_t>(sigma.value())};
  };
  T.unmap = [](const OrderEmbedding& f, const Term& sigma) {
    for (std::size_t i = 0; i < f.dom; ++i) {
      if (f(i) == sigma.value()) return Term::nat(i);
    }
    throw std::invalid_argument("element not in the image of the embedding");
  };
  T.normal = PraeDilator::Normal{[](std::size_t, std::size_t m) { return Term::nat(m); }};
  T.lift_order = [](const Order& x) { return x; };
  T.lift_map = [](const std::function<Term(const Term&)>& h, const Term& t) { return h(t); };
  return T;
}

PraeDilator successor_dilator() {
  // T(n) = n + 1 with a top element of empty support; f_T(a) = a + 1.
  PraeDilator T;
  T.name = "successor";
  T.at = [](std::size_t n) { return make_fin(n + 1); };
  T.map = [](const OrderEmbedding& f, const Term& sigma) {
    return sigma.value() == f.dom ? Term::nat(f.cod) : Term::nat(f(sigma.value()));
  };
  T.supp = [](std::size_t n, const Term& sigma) {
    if (sigma.value() == n) return std::vector<std::size_t>{};
    return std::vector<std::size_t>{static_cast<std::size_t>(sigma.value())};
  };
  T.unmap = [](const OrderEmbedding& f, const Term& sigma) {
    if (sigma.value() == f.cod) return Term::nat(f.dom);
    for (std::size_t i = 0; i < f.dom; ++i) {
      if (f(i) == sigma.value()) return Term::nat(i);
    }
    throw std::invalid_argument("element not in the image of the embedding");
  };
  return T;
}

PraeDilator constant_dilator(std::size_t c) {
  PraeDilator T;
  T.name = "constant_" + std::to_string(c);
  T.at = [c](std::size_t) { return make_fin(c); };
  T.map = [](const OrderEmbedding&, const Term& sigma) { return sigma; };
  T.supp = [](std::size_t, const Term&) { return std::vector<std::size_t>{}; };
  T.unmap = [](const OrderEmbedding&, const Term& sigma) { return sigma; };
  return T;
}

}  // namespace

PraeDilator zoo(const std::string& name) {
  if (name == "identity") return identity_dilator();
  if (name == "successor") return successor_dilator();
  if (name.rfind("constant_", 0) == 0) {
    return constant_dilator(static_cast<std::size_t>(std::stoul(name.substr(9))));
  }
  throw std::invalid_argument("unknown dilator: " + name);
}

}  // namespace dilex
