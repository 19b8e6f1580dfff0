#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dilex {

/// An ordinal below epsilon_0 in Cantor normal form:
/// w^{e_1}*c_1 + ... + w^{e_k}*c_k with e_1 > ... > e_k and c_i >= 1.
/// The empty term list denotes 0. Terms are kept canonical by construction;
/// structural equality coincides with ordinal equality.
class Ordinal {
 public:
  struct Part;  // defined after the class: it holds an Ordinal exponent

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: implicit on purpose, finite ordinals
  static Ordinal omega();

  // Builds from parts; throws std::invalid_argument unless exponents are
  // strictly decreasing and coefficients positive.
  static Ordinal from_parts(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  bool is_zero() const;
  bool is_finite() const;
  // Value of a finite ordinal; throws std::domain_error on infinite input.
  std::uint64_t finite_value() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Part> parts_;
};

struct Ordinal::Part {
  Ordinal exponent;
  std::uint64_t coeff;
};

inline bool Ordinal::is_zero() const { return parts_.empty(); }

std::strong_ordering cmp(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& a);
Ordinal two_pow(const Ordinal& a);
Ordinal square(const Ordinal& a);

enum class OrdKindTag { zero, successor, limit };

struct OrdKind {
  OrdKindTag tag;
  Ordinal predecessor;  // meaningful only for successors
};

OrdKind classify(const Ordinal& a);
bool is_successor(const Ordinal& a);
bool is_limit(const Ordinal& a);

// Nonzero single-term ordinals with coefficient 1, i.e. the powers w^b.
bool is_add_principal(const Ordinal& a);
// 1, 2, and the powers w^(w^b).
bool is_mult_principal(const Ordinal& a);

// Canonical fundamental sequence of a limit ordinal:
//   (mu + w^{e+1})[n] = mu + w^e * n
//   (mu + w^lam)[n]   = mu + w^{lam[n]}   for lam limit.
// Throws std::invalid_argument when l is not a limit.
Ordinal fund_seq(const Ordinal& l, std::uint64_t n);

// The normal functions f(a) = 1 + sum_{g<a}(1+g) and g with
// g(0) = 1, g(a+1) = (a+1)*2, both continuous at limits.
Ordinal f_eval(const Ordinal& a);
Ordinal g_eval(const Ordinal& a);

// Enumerations of the fixed points: w^(w^a) and w^(1+a).
Ordinal f_derivative(const Ordinal& a);
Ordinal g_derivative(const Ordinal& a);

// Prints in the CLI expression syntax, e.g. "w^(w+1)*2+w*3+1".
std::string to_string(const Ordinal& a);

}  // namespace dilex
