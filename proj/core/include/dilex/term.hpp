#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dilex {

/// Universal element representation for coded orders: a natural number,
/// the bottom marker, or a tuple of sub-terms. Structural identity only;
/// each order supplies its own comparison semantics.
class Term {
 public:
  enum class Kind { nat, bot, tuple };

  Term() : kind_(Kind::bot) {}

  static Term nat(std::uint64_t v) {
    Term t;
    t.kind_ = Kind::nat;
    t.value_ = v;
    return t;
  }
  static Term bot() { return Term(); }
  static Term tuple(std::vector<Term> kids) {
    Term t;
    t.kind_ = Kind::tuple;
    t.kids_ = std::move(kids);
    return t;
  }

  Kind kind() const { return kind_; }
  bool is_nat() const { return kind_ == Kind::nat; }
  bool is_bot() const { return kind_ == Kind::bot; }
  bool is_tuple() const { return kind_ == Kind::tuple; }

  std::uint64_t value() const;
  const std::vector<Term>& kids() const;

  // Structural comparison; used for deduplication, not for order semantics.
  std::strong_ordering operator<=>(const Term& other) const;
  bool operator==(const Term& other) const = default;

  // Compact s-expression rendering, e.g. "(3 _ (1 2))".
  std::string repr() const;

 private:
  Kind kind_;
  std::uint64_t value_ = 0;
  std::vector<Term> kids_;
};

}  // namespace dilex
