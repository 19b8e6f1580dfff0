#include "dilex/ordinal.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace dilex {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a + b;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) parts_.push_back(Part{Ordinal(), n});
}

Ordinal Ordinal::omega() {
  Ordinal w;
  w.parts_.push_back(Part{Ordinal(1), 1});
  return w;
}

Ordinal Ordinal::from_parts(std::vector<Part> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].coeff == 0) {
      throw std::invalid_argument("CNF coefficient must be positive");
    }
    if (i + 1 < parts.size() &&
        cmp(parts[i + 1].exponent, parts[i].exponent) != std::strong_ordering::less) {
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
    }
  }
  Ordinal a;
  a.parts_ = std::move(parts);
  return a;
}

bool Ordinal::is_finite() const {
  return parts_.empty() || (parts_.size() == 1 && parts_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (parts_.empty()) return 0;
  if (!is_finite()) throw std::domain_error("ordinal is infinite");
  return parts_[0].coeff;
}

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b) {
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  for (std::size_t i = 0; i < pa.size() && i < pb.size(); ++i) {
    if (auto c = cmp(pa[i].exponent, pb[i].exponent); c != std::strong_ordering::equal) {
      return c;
    }
    if (auto c = pa[i].coeff <=> pb[i].coeff; c != std::strong_ordering::equal) return c;
  }
  return pa.size() <=> pb.size();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return cmp(a, b); }

bool operator==(const Ordinal& a, const Ordinal& b) {
  return cmp(a, b) == std::strong_ordering::equal;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.parts().front().exponent;
  std::vector<Ordinal::Part> out;
  std::size_t i = 0;
  while (i < a.parts().size() && cmp(a.parts()[i].exponent, lead) == std::strong_ordering::greater) {
    out.push_back(a.parts()[i]);
    ++i;
  }
  std::uint64_t merged = b.parts().front().coeff;
  if (i < a.parts().size() && a.parts()[i].exponent == lead) {
    merged = checked_add(merged, a.parts()[i].coeff);
  }
  out.push_back(Ordinal::Part{lead, merged});
  out.insert(out.end(), b.parts().begin() + 1, b.parts().end());
  return Ordinal::from_parts(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal& lead_exp = a.parts().front().exponent;
  Ordinal result;
  for (const auto& part : b.parts()) {
    if (part.exponent.is_zero()) {
      // a * n: scale the leading coefficient, keep the tail.
      std::vector<Ordinal::Part> scaled = a.parts();
      scaled.front().coeff = checked_mul(scaled.front().coeff, part.coeff);
      result = add(result, Ordinal::from_parts(std::move(scaled)));
    } else {
      Ordinal term = Ordinal::from_parts({{add(lead_exp, part.exponent), part.coeff}});
      result = add(result, term);
    }
  }
  return result;
}

Ordinal omega_pow(const Ordinal& a) { return Ordinal::from_parts({{a, 1}}); }

Ordinal two_pow(const Ordinal& a) {
  // 2^(w*q + n) = w^q * 2^n.
  std::vector<Ordinal::Part> q_parts;
  std::uint64_t n = 0;
  for (const auto& part : a.parts()) {
    if (part.exponent.is_zero()) {
      n = part.coeff;
    } else if (part.exponent.is_finite()) {
      q_parts.push_back({Ordinal(part.exponent.finite_value() - 1), part.coeff});
    } else {
      // 1 + e = e for infinite e.
      q_parts.push_back(part);
    }
  }
  if (n >= 64) throw std::overflow_error("finite power of two exceeds 64 bits");
  Ordinal q = Ordinal::from_parts(std::move(q_parts));
  return mul(omega_pow(q), Ordinal(std::uint64_t{1} << n));
}

Ordinal square(const Ordinal& a) { return mul(a, a); }

OrdKind classify(const Ordinal& a) {
  if (a.is_zero()) return {OrdKindTag::zero, Ordinal()};
  if (a.parts().back().exponent.is_zero()) {
    std::vector<Ordinal::Part> parts = a.parts();
    if (--parts.back().coeff == 0) parts.pop_back();
    return {OrdKindTag::successor, Ordinal::from_parts(std::move(parts))};
  }
  return {OrdKindTag::limit, Ordinal()};
}

bool is_successor(const Ordinal& a) { return classify(a).tag == OrdKindTag::successor; }
bool is_limit(const Ordinal& a) { return classify(a).tag == OrdKindTag::limit; }

bool is_add_principal(const Ordinal& a) {
  return a.parts().size() == 1 && a.parts()[0].coeff == 1;
}

bool is_mult_principal(const Ordinal& a) {
  if (a == Ordinal(1) || a == Ordinal(2)) return true;
  return is_add_principal(a) && is_add_principal(a.parts()[0].exponent);
}

namespace {

// Splits off one copy of the last CNF term: a = rest + w^e.
std::pair<Ordinal, Ordinal> split_last(const Ordinal& a) {
  std::vector<Ordinal::Part> parts = a.parts();
  Ordinal e = parts.back().exponent;
  if (--parts.back().coeff == 0) parts.pop_back();
  return {Ordinal::from_parts(std::move(parts)), e};
}

}  // namespace

Ordinal fund_seq(const Ordinal& l, std::uint64_t n) {
  if (!is_limit(l)) throw std::invalid_argument("fund_seq requires a limit ordinal");
  auto [mu, e] = split_last(l);
  if (is_successor(e)) {
    Ordinal e_pred = classify(e).predecessor;
    return add(mu, mul(omega_pow(e_pred), Ordinal(n)));
  }
  return add(mu, omega_pow(fund_seq(e, n)));
}

namespace {

// Exponent t(d) with sum_{g < w^d} (1+g) = w^{t(d)}: split d = d'' + w^e
// at the last term and take d''*2 + w^e. Covers successors (e = 0) and
// limits uniformly; t(0) = 0.
Ordinal sum_exponent(const Ordinal& d) {
  if (d.is_zero()) return Ordinal();
  auto [rest, e] = split_last(d);
  return add(mul(rest, Ordinal(2)), omega_pow(e));
}

// Exponent of sum_{g < w^d} (1 + nu + g) for nu with leading exponent p.
Ordinal shifted_sum_exponent(const Ordinal& p, const Ordinal& d) {
  Ordinal plain = sum_exponent(d);
  Ordinal shifted = add(p, d);
  return cmp(shifted, plain) == std::strong_ordering::greater ? shifted : plain;
}

// sum_{g < a} (1 + g), computed term by term over the CNF of a.
Ordinal sum_one_plus_below(const Ordinal& a) {
  Ordinal result;
  Ordinal nu;
  for (const auto& part : a.parts()) {
    if (part.exponent.is_zero()) {
      std::uint64_t n = part.coeff;
      if (nu.is_zero()) {
        result = add(result, Ordinal(checked_add(n, checked_mul(n, n - 1) / 2)));
      } else {
        result = add(result, add(mul(nu, Ordinal(n)), Ordinal(n - 1)));
      }
    } else {
      Ordinal p = nu.is_zero() ? Ordinal() : nu.parts().front().exponent;
      result = add(result, omega_pow(shifted_sum_exponent(p, part.exponent)));
      nu = add(nu, omega_pow(part.exponent));
      if (part.coeff > 1) {
        Ordinal p2 = nu.parts().front().exponent;
        Ordinal block = omega_pow(shifted_sum_exponent(p2, part.exponent));
        result = add(result, mul(block, Ordinal(part.coeff - 1)));
        nu = add(nu, mul(omega_pow(part.exponent), Ordinal(part.coeff - 1)));
      }
    }
  }
  return result;
}

}  // namespace

Ordinal f_eval(const Ordinal& a) { return add(Ordinal(1), sum_one_plus_below(a)); }

Ordinal g_eval(const Ordinal& a) {
  OrdKind kind = classify(a);
  switch (kind.tag) {
    case OrdKindTag::zero:
      return Ordinal(1);
    case OrdKindTag::successor:
      return mul(a, Ordinal(2));
    case OrdKindTag::limit: {
      // sup_{b<l} (b+1)*2 = mu*2 + w^e for l = mu + w^e.
      auto [mu, e] = split_last(a);
      if (mu.is_zero()) return a;
      return add(mul(mu, Ordinal(2)), omega_pow(e));
    }
  }
  throw std::logic_error("unreachable");
}

Ordinal f_derivative(const Ordinal& a) { return omega_pow(omega_pow(a)); }

Ordinal g_derivative(const Ordinal& a) { return omega_pow(add(Ordinal(1), a)); }

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& part : a.parts()) {
    if (!out.empty()) out += "+";
    if (part.exponent.is_zero()) {
      out += std::to_string(part.coeff);
      continue;
    }
    out += "w";
    if (!(part.exponent == Ordinal(1))) {
      std::string es = to_string(part.exponent);
      bool atomic = es.find('+') == std::string::npos && es.find('*') == std::string::npos;
      out += "^" + (atomic ? es : "(" + es + ")");
    }
    if (part.coeff > 1) out += "*" + std::to_string(part.coeff);
  }
  return out;
}

}  // namespace dilex
