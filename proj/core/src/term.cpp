#include "dilex/term.hpp"

#include <stdexcept>

namespace dilex {

std::uint64_t Term::value() const {
  if (kind_ != Kind::nat) throw std::domain_error("term is not a natural");
  return value_;
}

const std::vector<Term>& Term::kids() const {
  if (kind_ != Kind::tuple) throw std::domain_error("term is not a tuple");
  return kids_;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
  if (auto c = kind_ <=> other.kind_; c != std::strong_ordering::equal) return c;
  switch (kind_) {
    case Kind::nat:
      return value_ <=> other.value_;
    case Kind::bot:
      return std::strong_ordering::equal;
    case Kind::tuple:
      for (std::size_t i = 0; i < kids_.size() && i < other.kids_.size(); ++i) {
        if (auto c = kids_[i] <=> other.kids_[i]; c != std::strong_ordering::equal) return c;
      }
      return kids_.size() <=> other.kids_.size();
  }
  throw std::logic_error("unreachable");
}

std::string Term::repr() const {
  switch (kind_) {
    case Kind::nat:
      return std::to_string(value_);
    case Kind::bot:
      return "_";
    case Kind::tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < kids_.size(); ++i) {
        if (i > 0) out += " ";
        out += kids_[i].repr();
      }
      return out + ")";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace dilex
