// Finite presentations and their closure into Cayley tables. Products are
// reduced by rewriting with relations oriented longer side -> shorter side
// (ties to the lexicographically smaller side); relations with a zero side
// send words to the absorbing element. The finished table re-verifies every
// relation, which catches non-confluent orientations.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayley.hpp"
#include "identity.hpp"
#include "word.hpp"

namespace cycreg {

//! Construction failure: the closure exceeded its cap or the finished
//! table does not satisfy the presentation.
class ClosureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

//! One defining relation; an absent right side denotes the zero element.
struct Relation {
  Word lhs;
  std::optional<Word> rhs;
};

struct Presentation {
  std::vector<Letter> generators;
  std::vector<Relation> relations;
};

//! Parses the presentation file format: a `gens: x y` line followed by one
//! relation per line (`word = word` or `word = 0`); `#` starts a comment.
inline Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool saw_gens = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto fail = [&](std::string const& message) {
    throw ParseError("line " + std::to_string(line_no) + ": " + message, 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto const hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto const start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) {
      continue;
    }
    auto const stop = line.find_last_not_of(" \t\r");
    std::string const body = line.substr(start, stop - start + 1);
    if (!saw_gens) {
      if (!body.starts_with("gens:")) {
        fail("expected a 'gens:' line before the relations");
      }
      for (char const c : body.substr(5)) {
        if (c == ' ' || c == '\t') {
          continue;
        }
        if (c < 'a' || c > 'z') {
          fail(std::string("invalid generator '") + c + "'");
        }
        Letter const g = Letter::from_char(c);
        if (std::find(p.generators.begin(), p.generators.end(), g)
            != p.generators.end()) {
          fail(std::string("duplicate generator '") + c + "'");
        }
        p.generators.push_back(g);
      }
      if (p.generators.empty()) {
        fail("at least one generator required");
      }
      saw_gens = true;
      continue;
    }
    auto const eq = body.find('=');
    if (eq == std::string::npos) {
      fail("expected 'word = word' or 'word = 0'");
    }
    auto parse_side = [&](std::string_view side) {
      try {
        return parse_word(side);
      } catch (ParseError const& e) {
        fail(e.message());
        throw;  // unreachable
      }
    };
    Word lhs = parse_side(std::string_view(body).substr(0, eq));
    std::string_view rhs_text = std::string_view(body).substr(eq + 1);
    auto const rhs_start = rhs_text.find_first_not_of(" \t");
    std::optional<Word> rhs;
    if (rhs_start != std::string_view::npos
        && rhs_text.find_first_not_of(" \t0") == std::string_view::npos
        && rhs_text.find('0') != std::string_view::npos) {
      if (rhs_text.find('0') != rhs_text.rfind('0')) {
        fail("the zero side must be a single '0'");
      }
      rhs = std::nullopt;
    } else {
      rhs = parse_side(rhs_text);
    }
    for (Word const* side : {&lhs, rhs ? &*rhs : &lhs}) {
      for (Letter const l : *side) {
        if (std::find(p.generators.begin(), p.generators.end(), l)
            == p.generators.end()) {
          fail(std::string("relation uses undeclared generator '")
               + l.to_char() + "'");
        }
      }
    }
    p.relations.push_back({std::move(lhs), std::move(rhs)});
  }
  if (!saw_gens) {
    throw ParseError("presentation is empty", 1);
  }
  return p;
}

namespace detail {

using LetterSeq = std::vector<Letter>;

// A rewriting rule; an absent replacement collapses the word to zero.
struct RewriteRule {
  LetterSeq from;
  std::optional<LetterSeq> to;
};

// (length, lexicographic) word order used to orient relations.
inline bool seq_less(LetterSeq const& a, LetterSeq const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

inline std::vector<RewriteRule> orient_relations(Presentation const& p) {
  std::vector<RewriteRule> rules;
  for (auto const& rel : p.relations) {
    LetterSeq const lhs = rel.lhs.letters();
    if (!rel.rhs) {
      rules.push_back({lhs, std::nullopt});
      continue;
    }
    LetterSeq const rhs = rel.rhs->letters();
    if (lhs == rhs) {
      continue;
    }
    if (seq_less(lhs, rhs)) {
      rules.push_back({rhs, lhs});
    } else {
      rules.push_back({lhs, rhs});
    }
  }
  return rules;
}

// Exhaustive leftmost rewriting; empty optional is the zero element. Each
// step strictly decreases (length, lex), so this terminates.
inline std::optional<LetterSeq> normal_form(
    LetterSeq word, std::vector<RewriteRule> const& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& rule : rules) {
      auto const it = std::search(word.begin(), word.end(),
                                  rule.from.begin(), rule.from.end());
      if (it == word.end()) {
        continue;
      }
      if (!rule.to) {
        return std::nullopt;
      }
      LetterSeq next(word.begin(), it);
      next.insert(next.end(), rule.to->begin(), rule.to->end());
      next.insert(next.end(), it + rule.from.size(), word.end());
      word = std::move(next);
      changed = true;
      break;
    }
  }
  return word;
}

inline std::string seq_name(std::optional<LetterSeq> const& nf) {
  if (!nf) {
    return "0";
  }
  return format_word(Word(*nf));
}

}  // namespace detail

//! Closes a presentation into a Cayley table by breadth-first closure of
//! normal forms under pairwise products. Throws ClosureError when the
//! element count exceeds `cap` or when the finished table fails to satisfy
//! a relation (a non-confluent orientation).
inline CayleyTable close_presentation(Presentation const& p,
                                      std::size_t cap) {
  if (cap == 0) {
    throw std::invalid_argument("cap must be >= 1");
  }
  using detail::LetterSeq;
  auto const rules = detail::orient_relations(p);

  std::vector<std::optional<LetterSeq>> elements;
  std::map<std::optional<LetterSeq>, std::size_t> index;
  auto intern = [&](std::optional<LetterSeq> nf, std::string const& via) {
    auto const it = index.find(nf);
    if (it != index.end()) {
      return it->second;
    }
    if (elements.size() == cap) {
      throw ClosureError("closure exceeded cap " + std::to_string(cap)
                         + ": the product " + via
                         + " did not stabilize (new element '"
                         + detail::seq_name(nf) + "')");
    }
    elements.push_back(nf);
    index.emplace(std::move(nf), elements.size() - 1);
    return elements.size() - 1;
  };

  for (Letter const g : p.generators) {
    intern(detail::normal_form({g}, rules),
           std::string("'") + g.to_char() + "'");
  }

  auto product_nf = [&](std::size_t i, std::size_t j) {
    if (!elements[i] || !elements[j]) {
      return std::optional<LetterSeq>{};
    }
    LetterSeq w = *elements[i];
    w.insert(w.end(), elements[j]->begin(), elements[j]->end());
    return detail::normal_form(std::move(w), rules);
  };

  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j < elements.size(); ++j) {
        auto nf = product_nf(i, j);
        if (!index.contains(nf)) {
          intern(std::move(nf), "'" + detail::seq_name(elements[i]) + "'*'"
                                    + detail::seq_name(elements[j]) + "'");
          grew = true;
        }
      }
    }
  }

  std::size_t const order = elements.size();
  std::vector<std::size_t> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      table[i * order + j] = index.at(product_nf(i, j));
    }
  }
  std::vector<std::string> names;
  for (auto const& nf : elements) {
    names.push_back(detail::seq_name(nf));
  }
  std::map<std::string, std::size_t> generators;
  std::optional<std::size_t> zero;
  if (auto const it = index.find(std::nullopt); it != index.end()) {
    zero = it->second;
  }
  for (Letter const g : p.generators) {
    generators.emplace(std::string(1, g.to_char()),
                       index.at(detail::normal_form({g}, rules)));
  }

  // Re-verify the relations against the finished table.
  auto fold = [&](Word const& w) {
    std::size_t acc = generators.at(std::string(1, w[0].to_char()));
    for (std::size_t i = 1; i < w.size(); ++i) {
      acc = table[acc * order
                  + generators.at(std::string(1, w[i].to_char()))];
    }
    return acc;
  };
  for (auto const& rel : p.relations) {
    std::size_t const left = fold(rel.lhs);
    std::optional<std::size_t> right;
    if (rel.rhs) {
      right = fold(*rel.rhs);
    } else if (zero) {
      right = *zero;
    } else {
      throw ClosureError("relation '" + format_word(rel.lhs)
                         + " = 0' requires a zero element, but none was "
                           "produced by the closure");
    }
    if (left != *right) {
      throw ClosureError(
          "relation verification failed for '" + format_word(rel.lhs) + " = "
          + (rel.rhs ? format_word(*rel.rhs) : std::string("0"))
          + "': rewriting is not confluent for this presentation");
    }
  }

  try {
    return CayleyTable(order, std::move(table), std::move(names),
                       std::move(generators), zero);
  } catch (std::invalid_argument const& e) {
    throw ClosureError(std::string("closure produced an invalid table: ")
                       + e.what());
  }
}

//! The named semigroups used by the variety-level decisions. K is the
//! one-parameter family K_n.
enum class BuiltinName { A0, A, B, Cl, Cr, N3, D, K };

inline std::optional<BuiltinName> builtin_from_string(std::string_view s) {
  if (s == "A0") return BuiltinName::A0;
  if (s == "A") return BuiltinName::A;
  if (s == "B") return BuiltinName::B;
  if (s == "Cl") return BuiltinName::Cl;
  if (s == "Cr") return BuiltinName::Cr;
  if (s == "N3") return BuiltinName::N3;
  if (s == "D") return BuiltinName::D;
  if (s == "K") return BuiltinName::K;
  return std::nullopt;
}

inline std::string display_name(BuiltinName name,
                                std::optional<std::size_t> n = {}) {
  switch (name) {
    case BuiltinName::A0: return "A0";
    case BuiltinName::A: return "A";
    case BuiltinName::B: return "B";
    case BuiltinName::Cl: return "Cl";
    case BuiltinName::Cr: return "Cr";
    case BuiltinName::N3: return "N3";
    case BuiltinName::D: return "D";
    case BuiltinName::K:
      return n ? "K_" + std::to_string(*n) : std::string("K");
  }
  throw std::invalid_argument("unknown builtin");
}

//! Defining relations of the named semigroup; n is required for K only.
inline Presentation builtin_presentation(BuiltinName name,
                                         std::size_t n = 0) {
  auto rel = [](std::string_view lhs, std::string_view rhs) {
    return Relation{parse_word(lhs),
                    rhs == "0" ? std::optional<Word>{} : parse_word(rhs)};
  };
  auto gens = [](std::string_view names) {
    std::vector<Letter> out;
    for (char const c : names) {
      out.push_back(Letter::from_char(c));
    }
    return out;
  };
  switch (name) {
    case BuiltinName::A0:
      return {gens("ab"), {rel("a^2", "a"), rel("b^2", "b"), rel("ba", "0")}};
    case BuiltinName::A:
      return {gens("xy"),
              {rel("x", "x^2"), rel("y^2", "0"), rel("xy", "yx")}};
    case BuiltinName::B:
      return {gens("xy"),
              {rel("x^2", "0"), rel("y^2", "0"), rel("xyx", "yxy")}};
    case BuiltinName::Cl:
      return {gens("xy"),
              {rel("x^2", "x^3"), rel("xy", "y"), rel("yx^2", "0"),
               rel("y^2", "0")}};
    case BuiltinName::Cr:
      return {gens("xy"),
              {rel("x^2", "x^3"), rel("yx", "y"), rel("x^2y", "0"),
               rel("y^2", "0")}};
    case BuiltinName::N3:
      return {gens("x"), {rel("x^3", "0")}};
    case BuiltinName::D:
      return {gens("xy"),
              {rel("x^2", "0"), rel("y", "y^2"), rel("yxy", "0")}};
    case BuiltinName::K: {
      if (n == 0) {
        throw std::invalid_argument("K requires n >= 1");
      }
      Presentation p{gens("xy"),
                     {rel("x^2", "0"),
                      rel("y^2", "y^" + std::to_string(n + 2)),
                      rel("yxy", "0")}};
      for (std::size_t q = 2; q <= n; ++q) {
        p.relations.push_back(rel("xy^" + std::to_string(q) + "x", "0"));
      }
      p.relations.push_back(
          rel("xyx", "xy^" + std::to_string(n + 1) + "x"));
      return p;
    }
  }
  throw std::invalid_argument("unknown builtin");
}

//! Closure cap used for the named semigroups: generous slack over the
//! actual orders (K_n has 3n + 6 elements).
inline std::size_t builtin_cap(BuiltinName name, std::size_t n = 0) {
  return name == BuiltinName::K ? 8 * n + 16 : 16;
}

//! The named semigroup as a table; n is required for K only.
inline CayleyTable builtin(BuiltinName name, std::size_t n = 0) {
  return close_presentation(builtin_presentation(name, n),
                            builtin_cap(name, n));
}

}  // namespace cycreg
