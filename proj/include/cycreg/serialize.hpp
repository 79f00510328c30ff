// JSON forms of Cayley tables and verdicts. Tables serialize as
// {order, names, table (row-major), generators, zero}; verdicts as
// {question, answer, witnesses, parameters}. Both round-trip.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley.hpp"
#include "presentation.hpp"
#include "variety.hpp"

namespace cycreg {

inline nlohmann::json table_to_json(CayleyTable const& t) {
  nlohmann::json j;
  j["order"] = t.order();
  j["names"] = t.names();
  j["table"] = t.table();
  j["generators"] = t.generators();
  j["zero"] = t.zero() ? nlohmann::json(*t.zero()) : nlohmann::json();
  return j;
}

inline CayleyTable table_from_json(nlohmann::json const& j) {
  std::optional<std::size_t> zero;
  if (!j.at("zero").is_null()) {
    zero = j.at("zero").get<std::size_t>();
  }
  return CayleyTable(j.at("order").get<std::size_t>(),
                     j.at("table").get<std::vector<std::size_t>>(),
                     j.at("names").get<std::vector<std::string>>(),
                     j.at("generators")
                         .get<std::map<std::string, std::size_t>>(),
                     zero);
}

inline nlohmann::json case_to_json(NonSimilarityCase const& c) {
  nlohmann::json j;
  j["case"] = std::string(to_string(c.tag));
  j["side"] = std::string(to_string(c.side));
  switch (c.tag) {
    case NonSimilarityTag::NOT_HOMOGENEOUS:
    case NonSimilarityTag::SINGLETON_POWER:
      j["letter"] = std::string(1, c.letters[0].to_char());
      break;
    case NonSimilarityTag::E_DIFFERS:
    case NonSimilarityTag::ORDER_DIFFERS:
      j["letters"] = std::vector<std::string>{
          std::string(1, c.letters[0].to_char()),
          std::string(1, c.letters[1].to_char())};
      break;
  }
  if (c.component) {
    j["component"] = *c.component;
  }
  return j;
}

inline nlohmann::json verdict_to_json(Verdict const& v) {
  nlohmann::json j;
  j["question"] = v.question;
  j["answer"] = v.answer;
  j["witnesses"] = nlohmann::json::array();
  for (auto const& w : v.forbidden) {
    nlohmann::json entry;
    entry["semigroup"] = display_name(w.name);
    if (w.n) {
      entry["n"] = *w.n;
    }
    j["witnesses"].push_back(entry);
  }
  if (v.witness) {
    nlohmann::json entry = case_to_json(v.witness->why);
    entry["identity_index"] = v.witness->index;
    entry["identity"] = format_identity(v.witness->identity);
    entry["derived"] = format_identity(v.witness->derived);
    j["witnesses"].push_back(entry);
  }
  j["parameters"] = nlohmann::json::object();
  if (v.n_max) {
    j["parameters"]["n_max"] = *v.n_max;
  }
  return j;
}

inline Verdict verdict_from_json(nlohmann::json const& j) {
  Verdict v;
  v.question = j.at("question").get<std::string>();
  v.answer = j.at("answer").get<bool>();
  if (j.at("parameters").contains("n_max")) {
    v.n_max = j.at("parameters").at("n_max").get<std::size_t>();
  }
  for (auto const& entry : j.at("witnesses")) {
    if (entry.contains("semigroup")) {
      auto const name =
          builtin_from_string(entry.at("semigroup").get<std::string>());
      if (!name) {
        throw std::invalid_argument("unknown semigroup witness");
      }
      std::optional<std::size_t> n;
      if (entry.contains("n")) {
        n = entry.at("n").get<std::size_t>();
      }
      v.forbidden.push_back({*name, n});
      continue;
    }
    NonSimilarityWitness w{
        entry.at("identity_index").get<std::size_t>(),
        parse_identity(entry.at("identity").get<std::string>()),
        NonSimilarityCase{},
        parse_identity(entry.at("derived").get<std::string>())};
    auto const tag = entry.at("case").get<std::string>();
    if (tag == "NOT_HOMOGENEOUS") {
      w.why.tag = NonSimilarityTag::NOT_HOMOGENEOUS;
    } else if (tag == "E_DIFFERS") {
      w.why.tag = NonSimilarityTag::E_DIFFERS;
    } else if (tag == "ORDER_DIFFERS") {
      w.why.tag = NonSimilarityTag::ORDER_DIFFERS;
    } else if (tag == "SINGLETON_POWER") {
      w.why.tag = NonSimilarityTag::SINGLETON_POWER;
    } else {
      throw std::invalid_argument("unknown case tag");
    }
    w.why.side = entry.at("side").get<std::string>() == "lhs" ? Side::lhs
                                                              : Side::rhs;
    if (entry.contains("letter")) {
      w.why.letters.push_back(
          Letter::from_char(entry.at("letter").get<std::string>().at(0)));
    }
    if (entry.contains("letters")) {
      for (auto const& s : entry.at("letters")) {
        w.why.letters.push_back(
            Letter::from_char(s.get<std::string>().at(0)));
      }
    }
    if (entry.contains("component")) {
      w.why.component = entry.at("component").get<std::size_t>();
    }
    v.witness = std::move(w);
  }
  return v;
}

}  // namespace cycreg
