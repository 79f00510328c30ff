// Identities: ordered pairs of words read as "lhs = rhs under every
// substitution", with the `<word> = <word>` text form.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "word.hpp"

namespace cycreg {

struct Identity {
  Word lhs;
  Word rhs;

  friend bool operator==(Identity const&, Identity const&) = default;
};

//! Parses `<word> = <word>`. Column numbers in errors refer to the full
//! input string.
inline Identity parse_identity(std::string_view text) {
  auto const eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError("expected '=' between two words", text.size() + 1);
  }
  auto parse_side = [&](std::string_view side, std::size_t offset) {
    try {
      return parse_word(side);
    } catch (ParseError const& e) {
      throw ParseError(e.message(), offset + e.column());
    }
  };
  Word lhs = parse_side(text.substr(0, eq), 0);
  Word rhs = parse_side(text.substr(eq + 1), eq + 1);
  return Identity{std::move(lhs), std::move(rhs)};
}

inline std::string format_identity(Identity const& id) {
  return format_word(id.lhs) + " = " + format_word(id.rhs);
}

}  // namespace cycreg
