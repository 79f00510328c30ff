// Command-line front end. Verbs:
//   word decompose <w>                word similar <u> <v>
//   identity check --semigroup <name> [--n N] "<u> = <v>"
//   identity derive-yx "<u> = <v>"
//   semigroup show <name> [--n N] [--json]
//   semigroup close <file> [--cap C]
//   variety cyclic-regular --basis <file> [--n-max N] [--json]
//   variety regular-closed --basis <file> [--json]
// Exit codes: 0 decision holds / success, 1 decision fails, 2 usage or
// parse error, 3 construction failure.

#pragma once

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cayley.hpp"
#include "identity.hpp"
#include "presentation.hpp"
#include "serialize.hpp"
#include "variety.hpp"
#include "word.hpp"

namespace cycreg {

namespace cli_detail {

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string join_names(CayleyTable const& t,
                              std::set<std::size_t> const& elements) {
  std::string out;
  for (std::size_t const e : elements) {
    if (!out.empty()) {
      out += ", ";
    }
    out += t.name(e);
  }
  return out.empty() ? "none" : out;
}

inline void print_table(CayleyTable const& t, std::ostream& out) {
  out << "order: " << t.order() << "\n";
  out << "zero: " << (t.zero() ? t.name(*t.zero()) : "none") << "\n";
  out << "elements:";
  for (auto const& name : t.names()) {
    out << " " << name;
  }
  out << "\n";
  std::size_t width = 1;
  for (auto const& name : t.names()) {
    width = std::max(width, name.size());
  }
  out << "table:\n";
  out << std::setw(static_cast<int>(width) + 2) << "*" << " |";
  for (auto const& name : t.names()) {
    out << " " << std::setw(static_cast<int>(width)) << name;
  }
  out << "\n";
  out << std::string(width + 3, '-') << "+"
      << std::string((width + 1) * t.order(), '-') << "\n";
  for (std::size_t i = 0; i < t.order(); ++i) {
    out << std::setw(static_cast<int>(width) + 2) << t.name(i) << " |";
    for (std::size_t j = 0; j < t.order(); ++j) {
      out << " " << std::setw(static_cast<int>(width))
          << t.name(t.product(i, j));
    }
    out << "\n";
  }
  out << "generators:";
  for (auto const& [name, index] : t.generators()) {
    out << " " << name << "->" << t.name(index);
  }
  out << "\n";
}

inline std::string describe_case(NonSimilarityCase const& c) {
  std::string out{to_string(c.tag)};
  switch (c.tag) {
    case NonSimilarityTag::NOT_HOMOGENEOUS:
      out += std::string(" (letter ") + c.letters[0].to_char() + " only in "
             + std::string(to_string(c.side)) + ")";
      break;
    case NonSimilarityTag::E_DIFFERS:
      out += std::string(" (letters ") + c.letters[0].to_char() + ","
             + c.letters[1].to_char() + " split in "
             + std::string(to_string(c.side)) + ")";
      break;
    case NonSimilarityTag::ORDER_DIFFERS:
      out += std::string(" (letters ") + c.letters[0].to_char() + ","
             + c.letters[1].to_char() + " in reversed order)";
      break;
    case NonSimilarityTag::SINGLETON_POWER:
      out += " (component " + std::to_string(*c.component) + "; singleton in "
             + std::string(to_string(c.side)) + ")";
      break;
  }
  return out;
}

inline std::string format_assignment(CayleyTable const& t,
                                     Assignment const& assignment) {
  std::string out;
  for (auto const& [letter, value] : assignment) {
    if (!out.empty()) {
      out += ", ";
    }
    out += letter.to_char();
    out += "->";
    out += t.name(value);
  }
  return out;
}

// Looks up a named semigroup, requiring --n exactly for the K family.
inline CayleyTable resolve_semigroup(std::string const& name,
                                     std::optional<std::size_t> n,
                                     std::string& shown_name) {
  auto const builtin_name = builtin_from_string(name);
  if (!builtin_name) {
    throw CLI::ValidationError(
        "semigroup", "unknown semigroup '" + name
                         + "' (expected A0, A, B, Cl, Cr, N3, D or K)");
  }
  if (*builtin_name == BuiltinName::K) {
    if (!n) {
      throw CLI::ValidationError("semigroup", "K requires --n");
    }
    if (*n == 0) {
      throw CLI::ValidationError("semigroup", "--n must be >= 1");
    }
  } else if (n) {
    throw CLI::ValidationError("semigroup", "--n applies only to K");
  }
  shown_name = display_name(*builtin_name, n);
  return builtin(*builtin_name, n.value_or(0));
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> const& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"word combinatorics and variety-level decision procedures "
               "for cyclically regular semigroups"};
  app.require_subcommand(1);

  // word
  auto* word_cmd = app.add_subcommand("word", "inspect words");
  word_cmd->require_subcommand(1);
  std::string decompose_arg;
  auto* decompose = word_cmd->add_subcommand(
      "decompose", "print the canonical decomposition");
  decompose->add_option("word", decompose_arg, "word to decompose")
      ->required();
  std::string similar_u, similar_v;
  auto* similar =
      word_cmd->add_subcommand("similar", "decide similarity of two words");
  similar->add_option("u", similar_u, "first word")->required();
  similar->add_option("v", similar_v, "second word")->required();

  // identity
  auto* identity_cmd = app.add_subcommand("identity", "work with identities");
  identity_cmd->require_subcommand(1);
  std::string check_semigroup;
  std::optional<std::size_t> check_n;
  std::string check_identity;
  auto* check = identity_cmd->add_subcommand(
      "check", "test an identity in a named semigroup");
  check->add_option("--semigroup", check_semigroup,
                    "A0, A, B, Cl, Cr, N3, D or K")
      ->required();
  check->add_option("--n", check_n, "parameter for K");
  check->add_option("identity", check_identity, "identity 'u = v'")
      ->required();
  std::string derive_identity;
  auto* derive = identity_cmd->add_subcommand(
      "derive-yx", "derive the x^k y^l = u yx v consequence");
  derive->add_option("identity", derive_identity, "identity 'u = v'")
      ->required();

  // semigroup
  auto* semigroup_cmd =
      app.add_subcommand("semigroup", "inspect named or presented semigroups");
  semigroup_cmd->require_subcommand(1);
  std::string show_name;
  std::optional<std::size_t> show_n;
  bool show_json = false;
  auto* show = semigroup_cmd->add_subcommand("show", "print a named table");
  show->add_option("name", show_name, "A0, A, B, Cl, Cr, N3, D or K")
      ->required();
  show->add_option("--n", show_n, "parameter for K");
  show->add_flag("--json", show_json, "emit the table as JSON");
  std::string close_file;
  std::size_t close_cap = 64;
  auto* close = semigroup_cmd->add_subcommand(
      "close", "close a presentation file into a table");
  close->add_option("file", close_file, "presentation file")->required();
  close->add_option("--cap", close_cap, "element cap (default 64)");

  // variety
  auto* variety_cmd =
      app.add_subcommand("variety", "decide properties of a variety");
  variety_cmd->require_subcommand(1);
  std::string cyclic_basis;
  std::optional<std::size_t> cyclic_n_max;
  bool cyclic_json = false;
  auto* cyclic = variety_cmd->add_subcommand(
      "cyclic-regular",
      "are all semigroups of the variety cyclically regular?");
  cyclic->add_option("--basis", cyclic_basis, "identity basis file")
      ->required();
  cyclic->add_option("--n-max", cyclic_n_max, "bound for the K_n family");
  cyclic->add_flag("--json", cyclic_json, "emit the verdict as JSON");
  std::string closed_basis;
  bool closed_json = false;
  auto* closed = variety_cmd->add_subcommand(
      "regular-closed",
      "are all semigroups of the variety regularly closed?");
  closed->add_option("--basis", closed_basis, "identity basis file")
      ->required();
  closed->add_flag("--json", closed_json, "emit the verdict as JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (CLI::ParseError const& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*decompose) {
      Word const w = parse_word(decompose_arg);
      auto const d = canonical_decomposition(w);
      out << "components:";
      out << " ";
      for (auto const& c : d.components()) {
        out << "[";
        for (std::size_t pos = c.start; pos <= c.end; ++pos) {
          out << w[pos - 1].to_char();
        }
        out << "]";
      }
      out << "; m_c=" << d.m_c() << "; blocking: ";
      auto const blocking = blocking_letters(w);
      if (blocking.empty()) {
        out << "none";
      } else {
        bool first = true;
        for (Letter const l : blocking) {
          if (!first) {
            out << ",";
          }
          out << l.to_char();
          first = false;
        }
      }
      out << "; regular: " << (is_regular_word(w) ? "yes" : "no") << "\n";
      return 0;
    }

    if (*similar) {
      Word const u = parse_word(similar_u);
      Word const v = parse_word(similar_v);
      if (is_similar(u, v)) {
        out << "similar: yes\n";
        return 0;
      }
      out << "similar: no; case: "
          << cli_detail::describe_case(classify_nonsimilarity(u, v)) << "\n";
      return 1;
    }

    if (*check) {
      std::string shown;
      auto const S =
          cli_detail::resolve_semigroup(check_semigroup, check_n, shown);
      Identity const id = parse_identity(check_identity);
      auto const violation = find_identity_violation(S, id);
      if (!violation) {
        out << "holds in " << shown << "\n";
        return 0;
      }
      out << "fails in " << shown << "; counterexample: "
          << cli_detail::format_assignment(S, *violation) << "\n";
      return 1;
    }

    if (*derive) {
      Identity const id = parse_identity(derive_identity);
      if (is_similar(id.lhs, id.rhs)) {
        err << "error: the sides are similar, no consequence of the form "
               "x^k y^l = u yx v exists\n";
        return 2;
      }
      out << format_identity(derive_yx_identity(id)) << "\n";
      return 0;
    }

    if (*show) {
      std::string shown;
      auto const S = cli_detail::resolve_semigroup(show_name, show_n, shown);
      if (show_json) {
        out << table_to_json(S).dump(2) << "\n";
        return 0;
      }
      out << "semigroup " << shown << "\n";
      cli_detail::print_table(S, out);
      out << "idempotents: " << cli_detail::join_names(S, idempotents(S))
          << "\n";
      out << "regular elements: "
          << cli_detail::join_names(S, regular_elements(S)) << "\n";
      auto const witness = find_non_regular_cyclic_element(S);
      if (witness) {
        out << "cyclically regular: no (a=" << S.name(witness->outer)
            << ", x="
            << (witness->inner ? S.name(*witness->inner) : std::string("1"))
            << ", axa=" << S.name(witness->value) << " not regular)\n";
      } else {
        out << "cyclically regular: yes\n";
      }
      out << "regularly closed: "
          << (is_regularly_closed(S) ? "yes" : "no") << "\n";
      return 0;
    }

    if (*close) {
      auto const p = parse_presentation(cli_detail::read_file(close_file));
      auto const S = close_presentation(p, close_cap);
      cli_detail::print_table(S, out);
      return 0;
    }

    if (*cyclic) {
      auto const basis =
          parse_basis(cli_detail::read_file(cyclic_basis));
      std::size_t const n_max =
          cyclic_n_max ? *cyclic_n_max : default_k_search_bound(basis);
      if (n_max == 0) {
        err << "error: --n-max must be >= 1\n";
        return 2;
      }
      auto const verdict = decide_cyclic_regularity(basis, n_max);
      if (cyclic_json) {
        out << verdict_to_json(verdict).dump(2) << "\n";
      } else {
        out << "question: cyclic-regular\n";
        out << "n_max: " << n_max << "\n";
        out << "answer: " << (verdict.answer ? "yes" : "no") << "\n";
        if (!verdict.forbidden.empty()) {
          out << "witnesses:";
          for (auto const& w : verdict.forbidden) {
            out << " " << display_name(w.name, w.n);
          }
          out << "\n";
        }
      }
      return verdict.answer ? 0 : 1;
    }

    if (*closed) {
      auto const basis =
          parse_basis(cli_detail::read_file(closed_basis));
      auto const verdict = decide_regular_closedness(basis);
      if (closed_json) {
        out << verdict_to_json(verdict).dump(2) << "\n";
      } else {
        out << "question: regular-closed\n";
        out << "answer: " << (verdict.answer ? "yes" : "no") << "\n";
        if (verdict.witness) {
          out << "witness: identity " << verdict.witness->index << " ("
              << format_identity(verdict.witness->identity) << "); case: "
              << cli_detail::describe_case(verdict.witness->why)
              << "; derived: " << format_identity(verdict.witness->derived)
              << "\n";
        }
      }
      return verdict.answer ? 0 : 1;
    }
  } catch (CLI::ValidationError const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (ParseError const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (ClosureError const& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cycreg
