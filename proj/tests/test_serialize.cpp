#include <catch2/catch_amalgamated.hpp>

#include <cycreg/serialize.hpp>

using namespace cycreg;

namespace {

Basis basis_of(std::initializer_list<std::string_view> ids) {
  Basis b;
  for (auto const s : ids) {
    b.identities.push_back(parse_identity(s));
  }
  return b;
}

}  // namespace

TEST_CASE("table JSON round-trips", "[serialize]") {
  for (auto const name : {BuiltinName::A0, BuiltinName::B, BuiltinName::N3}) {
    auto const t = builtin(name);
    auto const j = table_to_json(t);
    REQUIRE(j.at("order") == t.order());
    REQUIRE(j.at("table").size() == t.order() * t.order());
    auto const back = table_from_json(j);
    REQUIRE(back.order() == t.order());
    REQUIRE(back.table() == t.table());
    REQUIRE(back.names() == t.names());
    REQUIRE(back.generators() == t.generators());
    REQUIRE(back.zero() == t.zero());
    REQUIRE(table_to_json(back) == j);
  }
}

TEST_CASE("A0 JSON is the frozen schema", "[serialize]") {
  auto const j = table_to_json(builtin(BuiltinName::A0));
  REQUIRE(j == nlohmann::json::parse(R"({
    "order": 4,
    "names": ["a", "b", "ab", "0"],
    "table": [0, 2, 2, 3, 3, 1, 3, 3, 3, 2, 3, 3, 3, 3, 3, 3],
    "generators": {"a": 0, "b": 1},
    "zero": 3
  })"));
}

TEST_CASE("verdict JSON round-trips", "[serialize]") {
  SECTION("regular-closed with a witness") {
    auto const verdict = decide_regular_closedness(basis_of({"x = x^2"}));
    auto const j = verdict_to_json(verdict);
    REQUIRE(j.at("question") == "regular-closed");
    REQUIRE(j.at("answer") == true);
    REQUIRE(j.at("witnesses").size() == 1);
    REQUIRE(j.at("witnesses")[0].at("case") == "SINGLETON_POWER");
    REQUIRE(j.at("witnesses")[0].at("derived") == "xy = xyxy");
    REQUIRE(j.at("parameters") == nlohmann::json::object());

    auto const back = verdict_from_json(j);
    REQUIRE(verdict_to_json(back) == j);
  }
  SECTION("cyclic-regular with witnesses") {
    auto const verdict =
        decide_cyclic_regularity(basis_of({"xy = yx"}), 2);
    auto const j = verdict_to_json(verdict);
    REQUIRE(j.at("answer") == false);
    REQUIRE(j.at("parameters").at("n_max") == 2);
    REQUIRE(j.at("witnesses")
            == nlohmann::json::parse(
                R"([{"semigroup": "A"}, {"semigroup": "N3"}])"));
    auto const back = verdict_from_json(j);
    REQUIRE(verdict_to_json(back) == j);
  }
  SECTION("every case tag serializes") {
    for (auto const text :
         {"x^2 = xyx", "x^2y^2 = xyyx", "x^2y^2 = y^2x^2", "x = x^2"}) {
      auto const verdict = decide_regular_closedness(basis_of({text}));
      auto const j = verdict_to_json(verdict);
      auto const back = verdict_from_json(j);
      REQUIRE(verdict_to_json(back) == j);
    }
  }
}
