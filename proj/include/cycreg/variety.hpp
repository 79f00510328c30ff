// Variety-level decision procedures over a finite identity basis: cyclic
// regularity of every semigroup in the variety via the forbidden-semigroup
// test, regular closedness via the word-similarity test, and the
// constructive derivation of a consequence identity of the shape
// x^k y^l = u yx v from any non-similar basis identity.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayley.hpp"
#include "identity.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace cycreg {

struct Basis {
  std::vector<Identity> identities;
};

//! Parses a basis file: one `word = word` identity per line, `#` comments.
inline Basis parse_basis(std::string_view text) {
  Basis basis;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto const hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    try {
      basis.identities.push_back(parse_identity(line));
    } catch (ParseError const& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.message(),
                       e.column());
    }
  }
  if (basis.identities.empty()) {
    throw ParseError("basis contains no identities", 1);
  }
  return basis;
}

//! An identity holds in the four-element semigroup A0 exactly when its
//! sides are similar words, so the decision is a similarity check.
inline bool a0_holds(Identity const& id) {
  return is_similar(id.lhs, id.rhs);
}

//! The four ways two words can fail to be similar, in decision order:
//! different letter sets, equal letter sets but different e relations,
//! equal e but different component order, or an aligned singleton
//! component facing a power of the same letter.
enum class NonSimilarityTag {
  NOT_HOMOGENEOUS,
  E_DIFFERS,
  ORDER_DIFFERS,
  SINGLETON_POWER,
};

inline std::string_view to_string(NonSimilarityTag tag) {
  switch (tag) {
    case NonSimilarityTag::NOT_HOMOGENEOUS: return "NOT_HOMOGENEOUS";
    case NonSimilarityTag::E_DIFFERS: return "E_DIFFERS";
    case NonSimilarityTag::ORDER_DIFFERS: return "ORDER_DIFFERS";
    case NonSimilarityTag::SINGLETON_POWER: return "SINGLETON_POWER";
  }
  throw std::invalid_argument("unknown tag");
}

enum class Side { lhs, rhs };

inline Side other(Side s) {
  return s == Side::lhs ? Side::rhs : Side::lhs;
}

inline std::string_view to_string(Side s) {
  return s == Side::lhs ? "lhs" : "rhs";
}

//! Evidence for one of the four non-similarity cases.
//!
//! The meaning of the fields depends on the tag:
//!   NOT_HOMOGENEOUS: letters[0] occurs only on `side`.
//!   E_DIFFERS: letters[0], letters[1] lie in different components on
//!     `side` and in one component on the other side.
//!   ORDER_DIFFERS: the components of letters[0], letters[1] are ordered
//!     differently; on `side` letters[0] comes first.
//!   SINGLETON_POWER: component `component` is a single letter on `side`
//!     and a higher power of the same letter (letters[0]) opposite.
struct NonSimilarityCase {
  NonSimilarityTag tag;
  Side side;
  std::vector<Letter> letters;
  std::optional<std::size_t> component;
};

//! Classifies a non-similar pair of words by the first applicable case.
//! Throws std::invalid_argument on similar words.
inline NonSimilarityCase classify_nonsimilarity(Word const& u,
                                                Word const& v) {
  if (is_similar(u, v)) {
    throw std::invalid_argument("the words are similar");
  }
  auto const u_letters = u.letter_set();
  auto const v_letters = v.letter_set();
  if (u_letters != v_letters) {
    for (Letter const l : u_letters) {
      if (!v_letters.contains(l)) {
        return {NonSimilarityTag::NOT_HOMOGENEOUS, Side::lhs, {l}, {}};
      }
    }
    for (Letter const l : v_letters) {
      if (!u_letters.contains(l)) {
        return {NonSimilarityTag::NOT_HOMOGENEOUS, Side::rhs, {l}, {}};
      }
    }
  }

  auto const du = canonical_decomposition(u);
  auto const dv = canonical_decomposition(v);
  std::vector<Letter> const letters(u_letters.begin(), u_letters.end());
  auto index_in = [](CanonicalDecomposition const& d, Letter l) {
    return *d.component_of(l);
  };

  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      bool const same_u =
          index_in(du, letters[i]) == index_in(du, letters[j]);
      bool const same_v =
          index_in(dv, letters[i]) == index_in(dv, letters[j]);
      if (same_u != same_v) {
        return {NonSimilarityTag::E_DIFFERS, same_u ? Side::rhs : Side::lhs,
                {letters[i], letters[j]},
                {}};
      }
    }
  }

  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = 0; j < letters.size(); ++j) {
      if (index_in(du, letters[i]) < index_in(du, letters[j])
          && index_in(dv, letters[i]) > index_in(dv, letters[j])) {
        return {NonSimilarityTag::ORDER_DIFFERS,
                Side::lhs,
                {letters[i], letters[j]},
                {}};
      }
    }
  }

  // Equal e and <= relations force aligned components with equal letter
  // sets, so the failure must be a singleton facing a power.
  for (std::size_t i = 0; i < du.m_c() && i < dv.m_c(); ++i) {
    auto const& cu = du.components()[i];
    auto const& cv = dv.components()[i];
    if (cu.is_singleton() != cv.is_singleton()) {
      Side const side = cu.is_singleton() ? Side::lhs : Side::rhs;
      Letter const z = *cu.letters.begin();
      return {NonSimilarityTag::SINGLETON_POWER, side, {z}, i + 1};
    }
  }
  throw std::logic_error(
      "non-similar words matched none of the four cases");
}

namespace detail {

inline Word const& side_of(Identity const& id, Side s) {
  return s == Side::lhs ? id.lhs : id.rhs;
}

// x^a y with exactly one y, at the end.
inline bool is_power_of_x_times_y(Word const& w, Letter x, Letter y) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != x) {
      return false;
    }
  }
  return w[w.size() - 1] == y;
}

}  // namespace detail

//! Derives from a non-similar identity a consequence identity whose left
//! side is x^k y^l and whose right side contains the factor yx. The input
//! side playing the power role follows the case analysis; in the
//! non-homogeneous case the distinguished letter is mapped to y, the rest
//! to x, then y is replaced by xy (or by yx when the image ends in its
//! only y) and both sides are multiplied by a fixed power of y.
inline Identity derive_yx_identity(Identity const& id) {
  auto const c = classify_nonsimilarity(id.lhs, id.rhs);
  Letter const x = Letter::from_char('x');
  Letter const y = Letter::from_char('y');

  if (c.tag == NonSimilarityTag::NOT_HOMOGENEOUS) {
    Letter const d = c.letters[0];
    Word const& with_d = detail::side_of(id, c.side);
    Word const& power = detail::side_of(id, other(c.side));
    LetterMap to_xy;
    for (Letter const l : with_d.letter_set()) {
      to_xy.emplace(l, Word({l == d ? y : x}));
    }
    for (Letter const l : power.letter_set()) {
      to_xy.emplace(l, Word({x}));
    }
    Word const image = apply_letter_map(with_d, to_xy);
    // Insert x next to the y occurrences so a yx factor appears.
    LetterMap spread{{x, Word({x})},
                     {y, detail::is_power_of_x_times_y(image, x, y)
                             ? Word({y, x})
                             : Word({x, y})}};
    Word const with_yx = apply_letter_map(image, spread);
    std::size_t const m = std::max<std::size_t>(2, power.size());
    Word const tail = repeat(Word({y}), m);
    return {concat(repeat(Word({x}), power.size()), tail),
            concat(with_yx, tail)};
  }

  if (c.tag == NonSimilarityTag::SINGLETON_POWER) {
    Word const& power = detail::side_of(id, c.side);
    Word const& rest = detail::side_of(id, other(c.side));
    Letter const z = c.letters[0];
    std::size_t const pivot = *c.component;
    auto const d_power = canonical_decomposition(power);
    LetterMap f;
    for (Letter const l : power.letter_set()) {
      if (l == z) {
        f.emplace(l, Word({x, y}));
      } else {
        f.emplace(l, Word({*d_power.component_of(l) <= pivot ? x : y}));
      }
    }
    return {apply_letter_map(power, f), apply_letter_map(rest, f)};
  }

  // E_DIFFERS or ORDER_DIFFERS: threshold map over the power side's
  // component numbering.
  Word const& power = detail::side_of(id, c.side);
  Word const& rest = detail::side_of(id, other(c.side));
  auto const d_power = canonical_decomposition(power);
  std::size_t const n_first = *d_power.component_of(c.letters[0]);
  std::size_t const n_second = *d_power.component_of(c.letters[1]);
  std::size_t const threshold = std::min(n_first, n_second);
  LetterMap f;
  for (Letter const l : power.letter_set()) {
    f.emplace(l, Word({*d_power.component_of(l) <= threshold ? x : y}));
  }
  return {apply_letter_map(power, f), apply_letter_map(rest, f)};
}

//! A named semigroup that satisfies the whole basis and therefore lies in
//! the variety it defines.
struct ForbiddenWitness {
  BuiltinName name;
  std::optional<std::size_t> n;

  friend bool operator==(ForbiddenWitness const&,
                         ForbiddenWitness const&) = default;
};

//! A basis identity with non-similar sides, with its case and the derived
//! consequence identity. `index` is 1-based.
struct NonSimilarityWitness {
  std::size_t index;
  Identity identity;
  NonSimilarityCase why;
  Identity derived;
};

//! Outcome of a variety-level decision.
struct Verdict {
  std::string question;
  bool answer;
  std::vector<ForbiddenWitness> forbidden;
  std::optional<NonSimilarityWitness> witness;
  std::optional<std::size_t> n_max;
};

//! All semigroups of the variety are regularly closed exactly when some
//! basis identity has non-similar sides; the first such identity is
//! reported with its case and derived consequence. Linear in the summed
//! length of the basis words.
inline Verdict decide_regular_closedness(Basis const& basis) {
  Verdict verdict{"regular-closed", false, {}, {}, {}};
  for (std::size_t i = 0; i < basis.identities.size(); ++i) {
    auto const& id = basis.identities[i];
    if (is_similar(id.lhs, id.rhs)) {
      continue;
    }
    verdict.answer = true;
    verdict.witness = NonSimilarityWitness{
        i + 1, id, classify_nonsimilarity(id.lhs, id.rhs),
        derive_yx_identity(id)};
    break;
  }
  return verdict;
}

//! Executable form of the equivalent A0 test: true iff some basis identity
//! fails in A0 under exhaustive substitution.
inline bool cross_check_regular_closedness(Basis const& basis) {
  static CayleyTable const a0 = builtin(BuiltinName::A0);
  return std::any_of(basis.identities.begin(), basis.identities.end(),
                     [&](Identity const& id) {
                       return !satisfies_identity(a0, id);
                     });
}

//! Default search bound for the K_n family: the largest total length of a
//! basis identity.
inline std::size_t default_k_search_bound(Basis const& basis) {
  std::size_t bound = 1;
  for (auto const& id : basis.identities) {
    bound = std::max(bound, id.lhs.size() + id.rhs.size());
  }
  return bound;
}

//! All semigroups of the variety are cyclically regular exactly when no
//! forbidden semigroup satisfies the whole basis; every offender found
//! (checking K_n for n = 1..n_max) is reported, ordered by name then n.
inline Verdict decide_cyclic_regularity(Basis const& basis,
                                        std::size_t n_max) {
  if (n_max == 0) {
    throw std::invalid_argument("n_max must be >= 1");
  }
  Verdict verdict{"cyclic-regular", true, {}, {}, n_max};
  auto in_variety = [&](CayleyTable const& S) {
    return std::all_of(basis.identities.begin(), basis.identities.end(),
                       [&](Identity const& id) {
                         return satisfies_identity(S, id);
                       });
  };
  auto consider = [&](BuiltinName name, std::optional<std::size_t> n) {
    if (in_variety(builtin(name, n.value_or(0)))) {
      verdict.forbidden.push_back({name, n});
      verdict.answer = false;
    }
  };
  // Alphabetical by display name: A, B, Cl, Cr, D, K_1.., N3.
  consider(BuiltinName::A, {});
  consider(BuiltinName::B, {});
  consider(BuiltinName::Cl, {});
  consider(BuiltinName::Cr, {});
  consider(BuiltinName::D, {});
  for (std::size_t n = 1; n <= n_max; ++n) {
    consider(BuiltinName::K, n);
  }
  consider(BuiltinName::N3, {});
  return verdict;
}

}  // namespace cycreg
