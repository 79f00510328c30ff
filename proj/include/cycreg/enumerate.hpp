// Exhaustive enumeration of all semigroups of a given small order, as raw
// multiplication tables found by backtracking with incremental
// associativity pruning.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cayley.hpp"

namespace cycreg {

namespace detail {

// Checks every associativity triple whose partial products are already
// defined; `undef` marks unfilled cells.
inline bool partially_associative(std::vector<std::size_t> const& t,
                                  std::size_t k, std::size_t undef) {
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::size_t const ab = t[a * k + b];
      for (std::size_t c = 0; c < k; ++c) {
        std::size_t const bc = t[b * k + c];
        if (ab == undef || bc == undef) {
          continue;
        }
        std::size_t const left = t[ab * k + c];
        std::size_t const right = t[a * k + bc];
        if (left != undef && right != undef && left != right) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

//! Visits every associative multiplication table on {0, ..., order-1},
//! in lexicographic order of the row-major table. Order is capped at 4;
//! counts grow too fast beyond that for exhaustive use.
template <typename Visitor>
void enumerate_semigroups(std::size_t order, Visitor&& visit) {
  if (order == 0 || order > 4) {
    throw std::invalid_argument("order must be between 1 and 4");
  }
  std::size_t const cells = order * order;
  std::size_t const undef = order;
  std::vector<std::size_t> table(cells, undef);

  auto rec = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells) {
      visit(CayleyTable::anonymous(order, table));
      return;
    }
    for (std::size_t v = 0; v < order; ++v) {
      table[cell] = v;
      if (detail::partially_associative(table, order, undef)) {
        self(self, cell + 1);
      }
    }
    table[cell] = undef;
  };
  rec(rec, 0);
}

//! Convenience collector for test corpora.
inline std::vector<CayleyTable> all_semigroups(std::size_t order) {
  std::vector<CayleyTable> out;
  enumerate_semigroups(order,
                       [&](CayleyTable const& t) { out.push_back(t); });
  return out;
}

}  // namespace cycreg
