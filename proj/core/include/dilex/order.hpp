#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "dilex/ordinal.hpp"
#include "dilex/term.hpp"

namespace dilex {

/// A countable linear order presented by a decidable comparison and a
/// deterministic enumeration. Enumeration is graded: elements appear by
/// increasing grade ("term size"), ties within a grade broken by the
/// order's own comparison. Copies share the enumeration cache.
class Order {
 public:
  struct Impl {
    virtual ~Impl() = default;
    virtual std::string name() const = 0;
    virtual bool contains(const Term& t) const = 0;
    virtual std::strong_ordering compare(const Term& a, const Term& b) const = 0;
    // All elements of grade exactly g (order irrelevant, no duplicates).
    virtual std::vector<Term> grade(std::size_t g) const = 0;
    virtual std::optional<std::size_t> size() const { return std::nullopt; }
    virtual std::optional<Ordinal> denote(const Term& t) const;
    virtual std::string print(const Term& t) const { return t.repr(); }
  };

  explicit Order(std::shared_ptr<Impl> impl);

  std::string name() const { return state_->impl->name(); }
  bool contains(const Term& t) const { return state_->impl->contains(t); }
  std::strong_ordering compare(const Term& a, const Term& b) const;
  bool less(const Term& a, const Term& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  std::optional<std::size_t> size() const { return state_->impl->size(); }
  std::optional<Ordinal> denote(const Term& t) const { return state_->impl->denote(t); }
  std::string print(const Term& t) const { return state_->impl->print(t); }

  // Element at enumeration index; throws std::out_of_range past a finite end.
  Term at(std::size_t idx) const;
  // First min(k, size) elements in enumeration order.
  std::vector<Term> first(std::size_t k) const;
  // Enumeration index of t among the first search_bound elements.
  std::optional<std::size_t> index_of(const Term& t, std::size_t search_bound) const;
  // Elements of grade exactly g, sorted by the order's comparison.
  std::vector<Term> grade_sorted(std::size_t g) const;

 private:
  struct State {
    std::shared_ptr<Impl> impl;
    std::mutex mutex;
    std::vector<Term> prefix;
    std::size_t next_grade = 0;
  };
  void extend(std::size_t want) const;
  std::shared_ptr<State> state_;
};

/// Strictly increasing map between the finite orders {0..m-1} -> {0..n-1}.
struct OrderEmbedding {
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<std::size_t> values;

  std::size_t operator()(std::size_t i) const { return values.at(i); }
  bool operator==(const OrderEmbedding&) const = default;
};

// Validates strict monotonicity and range; throws std::invalid_argument.
OrderEmbedding make_embedding(std::size_t dom, std::size_t cod, std::vector<std::size_t> values);
OrderEmbedding identity_embedding(std::size_t n);
// g after f: compose(f: m->n, g: n->p) is the embedding m->p, i |-> g(f(i)).
OrderEmbedding compose(const OrderEmbedding& f, const OrderEmbedding& g);
// All C(n, m) embeddings m -> n, in lexicographic order of value sequences.
std::vector<OrderEmbedding> enumerate_all_embeddings(std::size_t m, std::size_t n);

/// A finite subset of an ambient order, kept strictly sorted ascending.
struct FinSubset {
  std::vector<Term> elements;
};

// Validates/sorts against the ambient order; rejects duplicates.
FinSubset make_subset(const Order& ambient, std::vector<Term> elements);
FinSubset union_subsets(const Order& ambient, const FinSubset& a, const FinSubset& b);
// en_a(i) is the i-th smallest element of a.
Term en(const FinSubset& a, std::size_t i);
// Positions of the elements of sub inside super; throws if not a subset.
OrderEmbedding inclusion_embedding(const Order& ambient, const FinSubset& sub,
                                   const FinSubset& super);
// |f| for an order-preserving f: a -> b given by images (images[i] is the
// image of en_a(i)); throws if f is not strictly increasing into b.
OrderEmbedding restrict_map(const Order& ambient, const FinSubset& a, const FinSubset& b,
                            const std::vector<Term>& images);

struct OrderCheckFailure {
  std::string law;
  std::string witness;
};

struct OrderCheckReport {
  std::vector<OrderCheckFailure> failures;
  std::size_t checks = 0;
  bool ok() const { return failures.empty(); }
  std::string summary() const;
};

// Checks that h preserves strict order on all pairs among the first `bound`
// elements of X; with require_onto, additionally that every enumerated
// element of Y (first `bound`) is hit.
OrderCheckReport order_iso_check(const Order& X, const Order& Y,
                                 const std::function<Term(const Term&)>& h, std::size_t bound,
                                 bool require_onto);

// Order builders. Lifted positions use Term::bot() for the new minimum;
// the argument order must not itself contain bot().
Order make_fin(std::size_t n);
Order make_ordinal_order(const Ordinal& bound);  // CnfOrdinals below `bound`
Order make_lift(const Order& x);                 // 1 + X
Order make_lex_square(const Order& x);           // (1+X)^2, lexicographic
Order make_pow2(const Order& x);                 // descending sequences over X
Order make_reverse_naturals();                   // ill-founded control: 0 > 1 > 2 > ...

// Conversions used by ordinal-backed orders.
Term ord_to_term(const Ordinal& a);
Ordinal term_to_ord(const Term& t);

// All CnfOrdinals of syntactic weight <= w, ascending.
std::vector<Ordinal> ordinals_up_to_weight(std::size_t w);
std::size_t ordinal_weight(const Ordinal& a);

}  // namespace dilex
