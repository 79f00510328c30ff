// Words over a finite alphabet, their cycle structure and the canonical
// decomposition, plus the similarity relation between words. Everything in
// this header is a pure function of immutable values.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cycreg {

//! Parse failure carrying a 1-based column into the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t column)
      : std::runtime_error(message + " (column " + std::to_string(column)
                           + ")"),
        message_(std::move(message)),
        column_(column) {}

  //! The message without the column suffix.
  std::string const& message() const noexcept {
    return message_;
  }

  //! 1-based column at which parsing failed.
  std::size_t column() const noexcept {
    return column_;
  }

 private:
  std::string message_;
  std::size_t column_;
};

//! A letter of the fixed alphabet {a, ..., z}, interned as a small id.
//! Two letters are equal iff their ids are equal.
class Letter {
 public:
  static constexpr std::size_t alphabet_size = 26;

  constexpr explicit Letter(std::uint8_t id) : id_(id) {
    if (id >= alphabet_size) {
      throw std::invalid_argument("letter id out of range");
    }
  }

  static Letter from_char(char c) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(std::string("not a letter: '") + c + "'");
    }
    return Letter(static_cast<std::uint8_t>(c - 'a'));
  }

  constexpr std::uint8_t id() const noexcept {
    return id_;
  }

  constexpr char to_char() const noexcept {
    return static_cast<char>('a' + id_);
  }

  friend constexpr auto operator<=>(Letter, Letter) noexcept = default;

 private:
  std::uint8_t id_;
};

//! A non-empty finite sequence of letters; an element of the free semigroup.
class Word {
 public:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw std::invalid_argument("a word must contain at least one letter");
    }
  }

  std::size_t size() const noexcept {
    return letters_.size();
  }

  //! 0-based access.
  Letter operator[](std::size_t i) const noexcept {
    return letters_[i];
  }

  std::vector<Letter> const& letters() const noexcept {
    return letters_;
  }

  std::set<Letter> letter_set() const {
    return {letters_.begin(), letters_.end()};
  }

  auto begin() const noexcept {
    return letters_.begin();
  }

  auto end() const noexcept {
    return letters_.end();
  }

  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word concat(Word const& u, Word const& v) {
  std::vector<Letter> letters = u.letters();
  letters.insert(letters.end(), v.begin(), v.end());
  return Word(std::move(letters));
}

//! w repeated n times; n must be positive.
inline Word repeat(Word const& w, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("cannot repeat a word zero times");
  }
  std::vector<Letter> letters;
  letters.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    letters.insert(letters.end(), w.begin(), w.end());
  }
  return Word(std::move(letters));
}

//! Parses the grammar `word := factor+ ; factor := LETTER ('^' INT)?` with
//! LETTER in [a-z] and INT >= 1; whitespace between factors is ignored.
//! `x^3` expands to `xxx`.
inline Word parse_word(std::string_view text) {
  static constexpr std::size_t max_exponent = 1'000'000;
  std::vector<Letter> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size()
           && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) {
      ++i;
    }
  };
  skip_ws();
  while (i < text.size()) {
    char const c = text[i];
    if (c < 'a' || c > 'z') {
      throw ParseError(std::string("unexpected character '") + c
                           + "', expected a letter in a-z",
                       i + 1);
    }
    Letter const letter = Letter::from_char(c);
    ++i;
    std::size_t count = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t const digits_start = i;
      if (i >= text.size() || text[i] < '0' || text[i] > '9') {
        throw ParseError("expected an exponent after '^'", i + 1);
      }
      count = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        count = count * 10 + static_cast<std::size_t>(text[i] - '0');
        if (count > max_exponent) {
          throw ParseError("exponent too large", digits_start + 1);
        }
        ++i;
      }
      if (count == 0) {
        throw ParseError("exponent must be >= 1", digits_start + 1);
      }
    }
    out.insert(out.end(), count, letter);
    skip_ws();
  }
  if (out.empty()) {
    throw ParseError("empty word", 1);
  }
  return Word(std::move(out));
}

//! Formats a word with runs compressed, e.g. `xxy` -> "x^2y". Inverse of
//! parse_word up to run compression.
inline std::string format_word(Word const& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    out += w[i].to_char();
    if (j - i > 1) {
      out += '^';
      out += std::to_string(j - i);
    }
    i = j;
  }
  return out;
}

//! Formats a word letter by letter, e.g. `xxy` -> "xxy".
inline std::string format_word_plain(Word const& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter const l : w) {
    out += l.to_char();
  }
  return out;
}

//! A 1-based inclusive interval of positions in some word.
struct PositionInterval {
  std::size_t first;
  std::size_t last;

  friend auto operator<=>(PositionInterval const&,
                          PositionInterval const&) = default;
};

//! For each letter occurring at least twice in w, the maximal interval
//! [first occurrence, last occurrence], ordered by first position. These
//! intervals generate, under overlap, the same position classes as the
//! cyclic subwords of w.
inline std::vector<PositionInterval> cycle_intervals(Word const& w) {
  std::array<std::size_t, Letter::alphabet_size> first{};
  std::array<std::size_t, Letter::alphabet_size> last{};
  for (std::size_t pos = 1; pos <= w.size(); ++pos) {
    auto const id = w[pos - 1].id();
    if (first[id] == 0) {
      first[id] = pos;
    }
    last[id] = pos;
  }
  std::vector<PositionInterval> out;
  for (std::size_t id = 0; id < Letter::alphabet_size; ++id) {
    if (first[id] != 0 && last[id] > first[id]) {
      out.push_back({first[id], last[id]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

//! A contiguous block of a canonical decomposition: positions start..end
//! (1-based, inclusive) and the set of letters occurring there.
struct Component {
  std::size_t start;
  std::size_t end;
  std::set<Letter> letters;

  std::size_t length() const noexcept {
    return end - start + 1;
  }

  bool is_singleton() const noexcept {
    return start == end;
  }

  friend bool operator==(Component const&, Component const&) = default;
};

//! The partition of a word into contiguous components of positions linked
//! by common cycles. Components tile 1..|w| left to right and have pairwise
//! disjoint letter sets.
class CanonicalDecomposition {
 public:
  explicit CanonicalDecomposition(std::vector<Component> components)
      : components_(std::move(components)) {}

  std::vector<Component> const& components() const noexcept {
    return components_;
  }

  //! The cyclic characteristic: number of components.
  std::size_t m_c() const noexcept {
    return components_.size();
  }

  //! 1-based index of the component whose letter set contains x, if any.
  std::optional<std::size_t> component_of(Letter x) const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (components_[i].letters.contains(x)) {
        return i + 1;
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<Component> components_;
};

//! Decomposes w by merging overlapping maximal letter intervals; positions
//! outside every interval become singleton components. Intervals sharing at
//! least one position merge; abutting intervals stay separate.
inline CanonicalDecomposition canonical_decomposition(Word const& w) {
  auto const intervals = cycle_intervals(w);
  std::vector<PositionInterval> merged;
  for (auto const& iv : intervals) {
    if (!merged.empty() && iv.first <= merged.back().last) {
      merged.back().last = std::max(merged.back().last, iv.last);
    } else {
      merged.push_back(iv);
    }
  }
  auto make_component = [&w](std::size_t start, std::size_t end) {
    Component c{start, end, {}};
    for (std::size_t pos = start; pos <= end; ++pos) {
      c.letters.insert(w[pos - 1]);
    }
    return c;
  };
  std::vector<Component> components;
  std::size_t pos = 1;
  auto next = merged.begin();
  while (pos <= w.size()) {
    if (next != merged.end() && next->first == pos) {
      components.push_back(make_component(pos, next->last));
      pos = next->last + 1;
      ++next;
    } else {
      components.push_back(make_component(pos, pos));
      ++pos;
    }
  }
  return CanonicalDecomposition(std::move(components));
}

//! m_c(w), the number of components of the canonical decomposition.
inline std::size_t cyclic_characteristic(Word const& w) {
  return canonical_decomposition(w).m_c();
}

//! True iff every letter occurrence lies inside some cyclic subword,
//! equivalently iff every component has length >= 2.
inline bool is_covered_by_cycles(Word const& w) {
  auto const decomp = canonical_decomposition(w);
  return std::all_of(decomp.components().begin(), decomp.components().end(),
                     [](Component const& c) { return c.length() >= 2; });
}

//! The letters t with w = w1 t w2 where t occurs in neither flank and the
//! flanks share no letters; exactly the letters of singleton components.
inline std::set<Letter> blocking_letters(Word const& w) {
  std::set<Letter> out;
  auto const decomp = canonical_decomposition(w);
  for (auto const& c : decomp.components()) {
    if (c.is_singleton()) {
      out.insert(*c.letters.begin());
    }
  }
  return out;
}

//! A regular word has length > 1 and cyclic characteristic 1.
inline bool is_regular_word(Word const& w) {
  return w.size() > 1 && cyclic_characteristic(w) == 1;
}

//! N_w(x): the 1-based index of the component holding every occurrence
//! of x. Throws if x does not occur in w.
inline std::size_t cyclic_number(Word const& w, Letter x) {
  auto const index = canonical_decomposition(w).component_of(x);
  if (!index) {
    throw std::invalid_argument(std::string("letter '") + x.to_char()
                                + "' does not occur in the word");
  }
  return *index;
}

//! x e_w y iff N_w(x) = N_w(y). Both letters must occur in w.
inline bool e_related(Word const& w, Letter x, Letter y) {
  return cyclic_number(w, x) == cyclic_number(w, y);
}

//! x <=_w y iff N_w(x) <= N_w(y). Both letters must occur in w.
inline bool leq_related(Word const& w, Letter x, Letter y) {
  return cyclic_number(w, x) <= cyclic_number(w, y);
}

//! Words are homogeneous when they use exactly the same letters.
inline bool is_homogeneous(Word const& u, Word const& v) {
  return u.letter_set() == v.letter_set();
}

//! Words u, v are similar when their decompositions have equal length,
//! aligned components use the same letters, and singleton components align.
inline bool is_similar(Word const& u, Word const& v) {
  auto const du = canonical_decomposition(u);
  auto const dv = canonical_decomposition(v);
  if (du.m_c() != dv.m_c()) {
    return false;
  }
  for (std::size_t i = 0; i < du.m_c(); ++i) {
    auto const& cu = du.components()[i];
    auto const& cv = dv.components()[i];
    if (cu.letters != cv.letters) {
      return false;
    }
    if (cu.is_singleton() != cv.is_singleton()) {
      return false;
    }
  }
  return true;
}

//! A substitution of words for letters, i.e. an endomorphism of the free
//! semigroup restricted to the letters it needs to act on.
using LetterMap = std::map<Letter, Word>;

//! Image of w under f: images concatenated in position order. Every letter
//! of w must have an image.
inline Word apply_letter_map(Word const& w, LetterMap const& f) {
  std::vector<Letter> out;
  for (Letter const l : w) {
    auto const it = f.find(l);
    if (it == f.end()) {
      throw std::invalid_argument(std::string("letter '") + l.to_char()
                                  + "' has no image under the map");
    }
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return Word(std::move(out));
}

}  // namespace cycreg
