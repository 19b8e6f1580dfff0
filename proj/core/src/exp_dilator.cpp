#include "dilex/exp_dilator.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dilex/normal_f.hpp"

namespace dilex {

namespace {

using TermCmp = std::function<std::strong_ordering(const Term&, const Term&)>;

// Generic CNF arithmetic on Term-coded sums w^{e_1}*c_1 + ... + w^{e_k}*c_k
// with exponents compared by exp_cmp. Used at both levels of an ETerm.

std::strong_ordering cnf_cmp(const TermCmp& exp_cmp, const Term& a, const Term& b) {
  const auto& pa = a.kids();
  const auto& pb = b.kids();
  for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
    if (auto c = exp_cmp(pa[i].kids()[0], pb[i].kids()[0]); c != std::strong_ordering::equal) {
      return c;
    }
    if (auto c = pa[i].kids()[1].value() <=> pb[i].kids()[1].value();
        c != std::strong_ordering::equal) {
      return c;
    }
  }
  return pa.size() <=> pb.size();
}

Term cnf_add(const TermCmp& exp_cmp, const Term& a, const Term& b) {
  if (b.kids().empty()) return a;
  if (a.kids().empty()) return b;
  const Term& lead = b.kids().front().kids()[0];
  std::vector<Term> out;
  std::size_t i = 0;
  while (i < a.kids().size() &&
         exp_cmp(a.kids()[i].kids()[0], lead) == std::strong_ordering::greater) {
    out.push_back(a.kids()[i++]);
  }
  std::uint64_t merged = b.kids().front().kids()[1].value();
  if (i < a.kids().size() && exp_cmp(a.kids()[i].kids()[0], lead) == std::strong_ordering::equal) {
    merged += a.kids()[i].kids()[1].value();
  }
  out.push_back(Term::tuple({lead, Term::nat(merged)}));
  out.insert(out.end(), b.kids().begin() + 1, b.kids().end());
  return Term::tuple(std::move(out));
}

Term cnf_single(Term exp, std::uint64_t coeff) {
  return Term::tuple({Term::tuple({std::move(exp), Term::nat(coeff)})});
}

// a * k for finite k >= 1: scales the leading coefficient.
Term cnf_scale_lead(const Term& a, std::uint64_t k) {
  if (a.kids().empty() || k == 1) return a;
  std::vector<Term> kids = a.kids();
  kids[0] = Term::tuple({kids[0].kids()[0], Term::nat(kids[0].kids()[1].value() * k)});
  return Term::tuple(std::move(kids));
}

// Splits off one copy of the last term: a = rest + w^e.
std::pair<Term, Term> cnf_split_last(const Term& a) {
  std::vector<Term> kids = a.kids();
  Term e = kids.back().kids()[0];
  std::uint64_t c = kids.back().kids()[1].value();
  if (c == 1) {
    kids.pop_back();
  } else {
    kids.back() = Term::tuple({e, Term::nat(c - 1)});
  }
  return {Term::tuple(std::move(kids)), std::move(e)};
}

class EOrderImpl : public Order::Impl {
 public:
  explicit EOrderImpl(Order x) : x_(std::move(x)) {}

  std::string name() const override { return "E(" + x_.name() + ")"; }

  bool contains(const Term& t) const override {
    if (!t.is_tuple()) return false;
    for (std::size_t i = 0; i < t.kids().size(); ++i) {
      const Term& part = t.kids()[i];
      if (!part.is_tuple() || part.kids().size() != 2 || !valid_inner(part.kids()[0]) ||
          !part.kids()[1].is_nat() || part.kids()[1].value() == 0) {
        return false;
      }
      if (i > 0 && inner_cmp()(part.kids()[0], t.kids()[i - 1].kids()[0]) !=
                       std::strong_ordering::less) {
        return false;
      }
    }
    return true;
  }

  std::strong_ordering compare(const Term& a, const Term& b) const override {
    return cnf_cmp(inner_cmp(), a, b);
  }

  // grade(t) = sum over outer parts of c * (1 + inner weight), with inner
  // weight = sum over atoms of (enumeration index + 1) * coefficient.
  std::vector<Term> grade(std::size_t g) const override {
    std::vector<Term> out;
    if (g == 0) {
      out.push_back(Term::tuple({}));
      return out;
    }
    std::vector<std::pair<Term, std::size_t>> inners;
    for (std::size_t w = 0; w + 1 <= g; ++w) {
      std::vector<std::pair<std::size_t, std::uint64_t>> chosen;
      inner_dfs(0, w, chosen, inners);
    }
    std::vector<std::pair<std::size_t, std::uint64_t>> parts;
    outer_dfs(inners, 0, g, parts, out);
    return out;
  }

  std::optional<Ordinal> denote(const Term& t) const override {
    Ordinal out;
    for (const Term& part : t.kids()) {
      Ordinal inner;
      for (const Term& ip : part.kids()[0].kids()) {
        auto d = x_.denote(ip.kids()[0]);
        if (!d) return std::nullopt;
        inner = add(inner, mul(omega_pow(*d), Ordinal(ip.kids()[1].value())));
      }
      out = add(out, mul(omega_pow(inner), Ordinal(part.kids()[1].value())));
    }
    return out;
  }

  std::string print(const Term& t) const override {
    if (t.kids().empty()) return "0";
    std::string out;
    for (const Term& part : t.kids()) {
      if (!out.empty()) out += "+";
      std::uint64_t c = part.kids()[1].value();
      if (part.kids()[0].kids().empty()) {
        out += std::to_string(c);
        continue;
      }
      out += "w^(" + print_inner(part.kids()[0]) + ")";
      if (c > 1) out += "*" + std::to_string(c);
    }
    return out;
  }

 private:
  TermCmp inner_cmp() const {
    return [this](const Term& a, const Term& b) { return cnf_cmp(atom_cmp(), a, b); };
  }
  TermCmp atom_cmp() const {
    return [this](const Term& a, const Term& b) { return x_.compare(a, b); };
  }

  bool valid_inner(const Term& t) const {
    if (!t.is_tuple()) return false;
    for (std::size_t i = 0; i < t.kids().size(); ++i) {
      const Term& part = t.kids()[i];
      if (!part.is_tuple() || part.kids().size() != 2 || !x_.contains(part.kids()[0]) ||
          !part.kids()[1].is_nat() || part.kids()[1].value() == 0) {
        return false;
      }
      if (i > 0 && !x_.less(part.kids()[0], t.kids()[i - 1].kids()[0])) return false;
    }
    return true;
  }

  std::string print_inner(const Term& t) const {
    std::string out;
    for (const Term& part : t.kids()) {
      if (!out.empty()) out += "+";
      out += "w^" + x_.print(part.kids()[0]);
      if (part.kids()[1].value() > 1) out += "*" + std::to_string(part.kids()[1].value());
    }
    return out;
  }

  void inner_dfs(std::size_t next, std::size_t remaining,
                 std::vector<std::pair<std::size_t, std::uint64_t>>& chosen,
                 std::vector<std::pair<Term, std::size_t>>& out) const {
    if (remaining == 0) {
      std::vector<Term> atoms;
      atoms.reserve(chosen.size());
      std::size_t weight = 0;
      for (auto [idx, c] : chosen) {
        atoms.push_back(Term::tuple({x_.at(idx), Term::nat(c)}));
        weight += (idx + 1) * static_cast<std::size_t>(c);
      }
      std::sort(atoms.begin(), atoms.end(), [&](const Term& a, const Term& b) {
        return x_.less(b.kids()[0], a.kids()[0]);
      });
      out.emplace_back(Term::tuple(std::move(atoms)), weight);
      return;
    }
    auto n = x_.size();
    for (std::size_t idx = next; idx + 1 <= remaining; ++idx) {
      if (n && idx >= *n) break;
      for (std::uint64_t c = 1; (idx + 1) * c <= remaining; ++c) {
        chosen.emplace_back(idx, c);
        inner_dfs(idx + 1, remaining - (idx + 1) * static_cast<std::size_t>(c), chosen, out);
        chosen.pop_back();
      }
    }
  }

  void outer_dfs(const std::vector<std::pair<Term, std::size_t>>& inners, std::size_t next,
                 std::size_t remaining, std::vector<std::pair<std::size_t, std::uint64_t>>& parts,
                 std::vector<Term>& out) const {
    if (remaining == 0) {
      if (parts.empty()) return;  // the zero term has grade 0, handled there
      std::vector<Term> outer;
      outer.reserve(parts.size());
      for (auto [idx, c] : parts) {
        outer.push_back(Term::tuple({inners[idx].first, Term::nat(c)}));
      }
      TermCmp ic = inner_cmp();
      std::sort(outer.begin(), outer.end(), [&](const Term& a, const Term& b) {
        return ic(b.kids()[0], a.kids()[0]) == std::strong_ordering::less;
      });
      out.push_back(Term::tuple(std::move(outer)));
      return;
    }
    for (std::size_t i = next; i < inners.size(); ++i) {
      std::size_t cost = 1 + inners[i].second;
      for (std::uint64_t c = 1; cost * c <= remaining; ++c) {
        parts.emplace_back(i, c);
        outer_dfs(inners, i + 1, remaining - cost * static_cast<std::size_t>(c), parts, out);
        parts.pop_back();
      }
    }
  }

  Order x_;
};

void collect_atoms(const Term& t, std::vector<std::size_t>& out) {
  for (const Term& part : t.kids()) {
    for (const Term& ip : part.kids()[0].kids()) out.push_back(ip.kids()[0].value());
  }
}

}  // namespace

Order E_order(const Order& X) { return Order(std::make_shared<EOrderImpl>(X)); }

std::strong_ordering e_cmp(const Order& X, const Term& a, const Term& b) {
  TermCmp atom = [&X](const Term& u, const Term& v) { return X.compare(u, v); };
  TermCmp inner = [&atom](const Term& u, const Term& v) { return cnf_cmp(atom, u, v); };
  return cnf_cmp(inner, a, b);
}

Term e_add(const Order& X, const Term& a, const Term& b) {
  TermCmp atom = [&X](const Term& u, const Term& v) { return X.compare(u, v); };
  TermCmp inner = [&atom](const Term& u, const Term& v) { return cnf_cmp(atom, u, v); };
  return cnf_add(inner, a, b);
}

Term e_nat(std::uint64_t n) {
  if (n == 0) return Term::tuple({});
  return cnf_single(Term::tuple({}), n);
}

Term e_rename(const std::function<Term(const Term&)>& h, const Term& t) {
  std::vector<Term> outer;
  outer.reserve(t.kids().size());
  for (const Term& part : t.kids()) {
    std::vector<Term> inner;
    inner.reserve(part.kids()[0].kids().size());
    for (const Term& ip : part.kids()[0].kids()) {
      inner.push_back(Term::tuple({h(ip.kids()[0]), ip.kids()[1]}));
    }
    outer.push_back(Term::tuple({Term::tuple(std::move(inner)), part.kids()[1]}));
  }
  return Term::tuple(std::move(outer));
}

Ordinal denote_E(std::size_t n, const Term& t) {
  Ordinal out;
  for (const Term& part : t.kids()) {
    Ordinal inner;
    for (const Term& ip : part.kids()[0].kids()) {
      if (ip.kids()[0].value() >= n) throw std::invalid_argument("atom out of range");
      inner = add(inner, mul(omega_pow(Ordinal(ip.kids()[0].value())),
                             Ordinal(ip.kids()[1].value())));
    }
    out = add(out, mul(omega_pow(inner), Ordinal(part.kids()[1].value())));
  }
  return out;
}

Term symbolic_f(const Order& X, const Term& t) {
  TermCmp atom = [&X](const Term& u, const Term& v) { return X.compare(u, v); };
  TermCmp inner = [&atom](const Term& u, const Term& v) { return cnf_cmp(atom, u, v); };
  auto inner_add = [&atom](const Term& u, const Term& v) { return cnf_add(atom, u, v); };
  auto outer_add = [&inner](const Term& u, const Term& v) { return cnf_add(inner, u, v); };

  // t(d) for the inner exponent d: split d = d'' + w^a and take d''*2 + w^a.
  auto sum_exponent = [&](const Term& d) -> Term {
    if (d.kids().empty()) return d;
    auto [rest, a] = cnf_split_last(d);
    return inner_add(cnf_scale_lead(rest, 2), cnf_single(a, 1));
  };
  auto shifted_sum_exponent = [&](const Term& p, const Term& d) {
    Term plain = sum_exponent(d);
    Term shifted = inner_add(p, d);
    return inner(shifted, plain) == std::strong_ordering::greater ? shifted : plain;
  };

  Term result = e_nat(0);
  Term nu = e_nat(0);
  for (const Term& part : t.kids()) {
    const Term& exp = part.kids()[0];
    std::uint64_t c = part.kids()[1].value();
    if (exp.kids().empty()) {
      if (nu.kids().empty()) {
        result = outer_add(result, e_nat(c + c * (c - 1) / 2));
      } else {
        result = outer_add(result, outer_add(cnf_scale_lead(nu, c), e_nat(c - 1)));
      }
    } else {
      Term p = nu.kids().empty() ? Term::tuple({}) : nu.kids().front().kids()[0];
      result = outer_add(result, cnf_single(shifted_sum_exponent(p, exp), 1));
      nu = outer_add(nu, cnf_single(exp, 1));
      if (c > 1) {
        Term p2 = nu.kids().front().kids()[0];
        Term block = cnf_single(shifted_sum_exponent(p2, exp), 1);
        result = outer_add(result, cnf_scale_lead(block, c - 1));
        nu = outer_add(nu, cnf_single(exp, c - 1));
      }
    }
  }
  return outer_add(e_nat(1), result);
}

PraeDilator E_build() {
  PraeDilator E;
  E.name = "E";
  E.at = [](std::size_t n) { return E_order(make_fin(n)); };
  E.map = [](const OrderEmbedding& f, const Term& t) {
    return e_rename([&f](const Term& a) { return Term::nat(f(a.value())); }, t);
  };
  E.supp = [](std::size_t, const Term& t) {
    std::vector<std::size_t> out;
    collect_atoms(t, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  E.unmap = [](const OrderEmbedding& f, const Term& t) {
    auto back = [&f](const Term& a) {
      for (std::size_t i = 0; i < f.dom; ++i) {
        if (f(i) == a.value()) return Term::nat(i);
      }
      throw std::invalid_argument("atom not in the image of the embedding");
    };
    return e_rename(back, t);
  };
  E.normal = PraeDilator::Normal{[](std::size_t, std::size_t m) {
    return cnf_single(cnf_single(Term::nat(m), 1), 1);  // w^(w^m)
  }};
  E.lift_order = [](const Order& x) { return E_order(x); };
  E.lift_map = e_rename;
  return E;
}

UpperDerivative xi_build() {
  UpperDerivative G;
  G.S = E_build();
  G.xi = [](std::size_t n, const Term& rho) {
    Order atoms = make_fin(n);
    Term ft = eta(E_order(atoms), rho);
    if (ft.is_bot()) return e_nat(0);
    Term fhat = symbolic_f(atoms, ft.kids()[0]);
    const Term& s = ft.kids()[1];
    if (s.is_bot()) return fhat;
    return e_add(atoms, e_add(atoms, fhat, e_nat(1)), s);
  };
  return G;
}

Term xi_F(const Order& X, const UpperDerivative& G, const Term& ft) {
  Term e = eta_inv(ft);
  Term composed = zeta_forward(F_build(), G.S, X, e);
  return dext_xi(G.S, G.xi, X, composed);
}

Term J_embed(const Order& X, const UpperDerivative& G, const std::vector<Term>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!X.contains(seq[i])) throw std::invalid_argument("sequence element outside the order");
    if (i > 0 && !X.less(seq[i], seq[i - 1])) {
      throw std::invalid_argument("sequence must be strictly descending");
    }
  }
  Term cur = xi_F(X, G, Term::bot());
  for (std::size_t i = seq.size(); i-- > 0;) {
    cur = xi_F(X, G, Term::tuple({ext_mu(G.S, X, seq[i]), cur}));
  }
  return cur;
}

}  // namespace dilex
