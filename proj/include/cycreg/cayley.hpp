// Finite semigroups as explicit multiplication tables, together with the
// element-level regularity notions: regular elements, cyclic elements,
// regular closedness, principal ideals, and exhaustive identity checking.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "identity.hpp"
#include "word.hpp"

namespace cycreg {

//! A finite semigroup given by its full multiplication table. Construction
//! verifies associativity, the absorbing law of the zero element when one
//! is declared, and that the generators generate every element.
class CayleyTable {
 public:
  CayleyTable(std::size_t order, std::vector<std::size_t> table,
              std::vector<std::string> names,
              std::map<std::string, std::size_t> generators,
              std::optional<std::size_t> zero)
      : order_(order),
        table_(std::move(table)),
        names_(std::move(names)),
        generators_(std::move(generators)),
        zero_(zero) {
    validate();
  }

  //! A table whose elements are their own generators, named s0, s1, ...
  static CayleyTable anonymous(std::size_t order,
                               std::vector<std::size_t> table) {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> generators;
    for (std::size_t i = 0; i < order; ++i) {
      names.push_back("s" + std::to_string(i));
      generators.emplace(names.back(), i);
    }
    return CayleyTable(order, std::move(table), std::move(names),
                       std::move(generators), std::nullopt);
  }

  std::size_t order() const noexcept {
    return order_;
  }

  std::size_t product(std::size_t a, std::size_t b) const noexcept {
    return table_[a * order_ + b];
  }

  std::string const& name(std::size_t i) const {
    return names_.at(i);
  }

  std::vector<std::string> const& names() const noexcept {
    return names_;
  }

  std::map<std::string, std::size_t> const& generators() const noexcept {
    return generators_;
  }

  std::optional<std::size_t> zero() const noexcept {
    return zero_;
  }

  //! The table in row-major order: entry a*order + b is the product a*b.
  std::vector<std::size_t> const& table() const noexcept {
    return table_;
  }

 private:
  void validate() const {
    if (order_ == 0) {
      throw std::invalid_argument("a semigroup has at least one element");
    }
    if (table_.size() != order_ * order_) {
      throw std::invalid_argument("table size does not match order");
    }
    if (names_.size() != order_) {
      throw std::invalid_argument("one name per element required");
    }
    for (std::size_t const v : table_) {
      if (v >= order_) {
        throw std::invalid_argument("table entry out of range");
      }
    }
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = 0; b < order_; ++b) {
        for (std::size_t c = 0; c < order_; ++c) {
          if (product(product(a, b), c) != product(a, product(b, c))) {
            throw std::invalid_argument(
                "not associative at (" + std::to_string(a) + ", "
                + std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (zero_) {
      if (*zero_ >= order_) {
        throw std::invalid_argument("zero element out of range");
      }
      for (std::size_t s = 0; s < order_; ++s) {
        if (product(*zero_, s) != *zero_ || product(s, *zero_) != *zero_) {
          throw std::invalid_argument("declared zero is not absorbing");
        }
      }
    }
    for (auto const& [name, index] : generators_) {
      if (index >= order_) {
        throw std::invalid_argument("generator '" + name + "' out of range");
      }
    }
    // Every element must be a product of generators.
    std::vector<bool> reached(order_, false);
    std::vector<std::size_t> frontier;
    for (auto const& [name, index] : generators_) {
      if (!reached[index]) {
        reached[index] = true;
        frontier.push_back(index);
      }
    }
    std::vector<std::size_t> gens = frontier;
    while (!frontier.empty()) {
      std::size_t const a = frontier.back();
      frontier.pop_back();
      for (std::size_t const g : gens) {
        for (std::size_t const p : {product(a, g), product(g, a)}) {
          if (!reached[p]) {
            reached[p] = true;
            frontier.push_back(p);
          }
        }
      }
    }
    for (std::size_t i = 0; i < order_; ++i) {
      if (!reached[i]) {
        throw std::invalid_argument("element " + std::to_string(i)
                                    + " is not a product of generators");
      }
    }
  }

  std::size_t order_;
  std::vector<std::size_t> table_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> generators_;
  std::optional<std::size_t> zero_;
};

//! A substitution of semigroup elements for letters.
using Assignment = std::map<Letter, std::size_t>;

//! Value of w in S under the assignment: the left-to-right fold of the
//! table product. Every letter of w must be assigned.
inline std::size_t evaluate_word(CayleyTable const& S, Word const& w,
                                 Assignment const& assignment) {
  auto value_of = [&](Letter l) {
    auto const it = assignment.find(l);
    if (it == assignment.end()) {
      throw std::invalid_argument(std::string("letter '") + l.to_char()
                                  + "' has no assigned value");
    }
    return it->second;
  };
  std::size_t acc = value_of(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = S.product(acc, value_of(w[i]));
  }
  return acc;
}

//! b is regular when b = b*z*b for some z in S.
inline bool is_regular_element(CayleyTable const& S, std::size_t b) {
  for (std::size_t z = 0; z < S.order(); ++z) {
    if (S.product(S.product(b, z), b) == b) {
      return true;
    }
  }
  return false;
}

//! rS, the set of regular elements.
inline std::set<std::size_t> regular_elements(CayleyTable const& S) {
  std::set<std::size_t> out;
  for (std::size_t b = 0; b < S.order(); ++b) {
    if (is_regular_element(S, b)) {
      out.insert(b);
    }
  }
  return out;
}

inline std::set<std::size_t> idempotents(CayleyTable const& S) {
  std::set<std::size_t> out;
  for (std::size_t e = 0; e < S.order(); ++e) {
    if (S.product(e, e) == e) {
      out.insert(e);
    }
  }
  return out;
}

//! A cyclic element a*x*a that is not regular; `inner` empty means the
//! adjoined-identity case, i.e. the element a*a.
struct NonRegularCyclicElement {
  std::size_t outer;
  std::optional<std::size_t> inner;
  std::size_t value;
};

//! Scans elements a ascending, the adjoined-identity case first and then
//! inner elements ascending; returns the first non-regular cyclic element.
inline std::optional<NonRegularCyclicElement> find_non_regular_cyclic_element(
    CayleyTable const& S) {
  for (std::size_t a = 0; a < S.order(); ++a) {
    std::size_t const square = S.product(a, a);
    if (!is_regular_element(S, square)) {
      return NonRegularCyclicElement{a, std::nullopt, square};
    }
    for (std::size_t x = 0; x < S.order(); ++x) {
      std::size_t const b = S.product(S.product(a, x), a);
      if (!is_regular_element(S, b)) {
        return NonRegularCyclicElement{a, x, b};
      }
    }
  }
  return std::nullopt;
}

//! Every cyclic element a*x*a (x from S with an adjoined identity, so a*a
//! counts) is regular.
inline bool is_cyclically_regular(CayleyTable const& S) {
  return !find_non_regular_cyclic_element(S).has_value();
}

//! rS is closed under the table product.
inline bool is_regularly_closed(CayleyTable const& S) {
  auto const regular = regular_elements(S);
  for (std::size_t const b : regular) {
    for (std::size_t const c : regular) {
      if (!regular.contains(S.product(b, c))) {
        return false;
      }
    }
  }
  return true;
}

//! I(a) = S^1 a S^1: a itself together with all one- and two-sided
//! multiples of a.
inline std::set<std::size_t> principal_ideal(CayleyTable const& S,
                                             std::size_t a) {
  if (a >= S.order()) {
    throw std::invalid_argument("element out of range");
  }
  std::set<std::size_t> out{a};
  for (std::size_t s = 0; s < S.order(); ++s) {
    out.insert(S.product(s, a));
    out.insert(S.product(a, s));
    for (std::size_t t = 0; t < S.order(); ++t) {
      out.insert(S.product(S.product(s, a), t));
    }
  }
  return out;
}

//! Checks all |S|^k assignments over the k distinct letters of the
//! identity; returns the lexicographically first violating assignment
//! (letters ascending, element indices ascending) or nothing.
inline std::optional<Assignment> find_identity_violation(CayleyTable const& S,
                                                         Identity const& id) {
  std::set<Letter> letter_set = id.lhs.letter_set();
  auto const rhs_letters = id.rhs.letter_set();
  letter_set.insert(rhs_letters.begin(), rhs_letters.end());
  std::vector<Letter> const letters(letter_set.begin(), letter_set.end());

  std::vector<std::size_t> values(letters.size(), 0);
  while (true) {
    Assignment assignment;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      assignment.emplace(letters[i], values[i]);
    }
    if (evaluate_word(S, id.lhs, assignment)
        != evaluate_word(S, id.rhs, assignment)) {
      return assignment;
    }
    std::size_t i = letters.size();
    while (i > 0) {
      --i;
      if (++values[i] < S.order()) {
        break;
      }
      values[i] = 0;
      if (i == 0) {
        return std::nullopt;
      }
    }
  }
}

inline bool satisfies_identity(CayleyTable const& S, Identity const& id) {
  return !find_identity_violation(S, id).has_value();
}

//! The pair of identities x^2 = x^{n+2} and xyx = (xy)^{n+1}x whose joint
//! satisfaction forces cyclic regularity.
inline std::pair<Identity, Identity> cyclic_regularity_identities(
    std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("n must be >= 1");
  }
  Word const x = parse_word("x");
  Word const xy = parse_word("xy");
  Identity power{parse_word("x^2"), repeat(x, n + 2)};
  Identity sandwich{parse_word("xyx"), concat(repeat(xy, n + 1), x)};
  return {std::move(power), std::move(sandwich)};
}

inline bool satisfies_cyclic_regularity_identities(CayleyTable const& S,
                                                   std::size_t n) {
  auto const [power, sandwich] = cyclic_regularity_identities(n);
  return satisfies_identity(S, power) && satisfies_identity(S, sandwich);
}

}  // namespace cycreg
