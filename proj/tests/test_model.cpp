#include <doctest.h>

#include <nlohmann/json.hpp>

#include "kht/errors.hpp"
#include "kht/model.hpp"

using namespace kht;
using nlohmann::json;

TEST_CASE("a minimal model loads") {
  json doc = {{"spaces", {{{"name", "X"}, {"points", {"a", "b"}}}}}};
  Model m = model_from_json(doc);
  REQUIRE(m.spaces.size() == 1);
  CHECK(m.spaces[0]->is_discrete());  // no opens means discrete
  CHECK(m.find_space("X"));
  CHECK_FALSE(m.find_space("Y"));
}

TEST_CASE("explicit opens are validated") {
  json doc = {{"spaces",
               {{{"name", "S"}, {"points", {"s0", "s1"}}, {"opens", {json::array(), {1}, {0, 1}}}}}}};
  Model m = model_from_json(doc);
  CHECK_FALSE(m.spaces[0]->is_discrete());

  json bad = doc;
  bad["spaces"][0]["opens"] = {json::array(), {1}};  // full set missing
  try {
    model_from_json(bad);
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation);
  }
}

TEST_CASE("a non-continuous map is rejected naming the failing open") {
  json doc = {
      {"spaces",
       {{{"name", "S"}, {"points", {"s0", "s1"}}, {"opens", {json::array(), {1}, {0, 1}}}},
        {{"name", "D"}, {"points", {"d0", "d1"}}}}},
      {"maps",
       {{{"name", "bad"}, {"dom", "S"}, {"cod", "D"}, {"table", {{"s0", "d0"}, {"s1", "d1"}}}}}}};
  try {
    model_from_json(doc);
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation);
    CHECK(std::string(e.what()).find("preimage of open") != std::string::npos);
  }
}

TEST_CASE("undeclared references are schema errors") {
  json doc = {{"spaces", {{{"name", "X"}, {"points", {"a"}}}}},
              {"maps",
               {{{"name", "f"}, {"dom", "X"}, {"cod", "Nope"}, {"table", {{"a", "a"}}}}}}};
  try {
    model_from_json(doc);
    FAIL("expected schema error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::schema);
    CHECK(std::string(e.what()).find("Nope") != std::string::npos);
  }
}

TEST_CASE("predicates resolve space expressions and validate clopenness") {
  json doc = {{"spaces",
               {{{"name", "X"}, {"points", {"a", "b"}}},
                {{"name", "S"}, {"points", {"s0", "s1"}}, {"opens", {json::array(), {1}, {0, 1}}}}}},
              {"predicates",
               {{{"name", "r"}, {"space", "X*X"}, {"extent", {0, 3}}},
                {{"name", "w"}, {"space", "S"}, {"extent", json::array()}}}}};
  Model m = model_from_json(doc);
  CHECK(m.find_predicate("r")->space()->size() == 4);

  json bad = doc;
  bad["predicates"][1]["extent"] = {1};  // {s1} is open but not closed
  try {
    model_from_json(bad);
    FAIL("expected validation error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::validation);
  }
}

TEST_CASE("incomplete map tables are schema errors") {
  json doc = {{"spaces", {{{"name", "X"}, {"points", {"a", "b"}}}}},
              {"maps", {{{"name", "f"}, {"dom", "X"}, {"cod", "X"}, {"table", {{"a", "a"}}}}}}};
  CHECK_THROWS_AS(model_from_json(doc), Error);
}

TEST_CASE("missing files are io errors") {
  try {
    load_model("/nonexistent/model.json");
    FAIL("expected io error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::io);
  }
}

TEST_CASE("the bundled example model loads and round-trips spaces") {
  Model m = load_model(KHT_EXAMPLE_MODEL);
  CHECK(m.spaces.size() == 5);
  CHECK(m.maps.size() == 2);
  CHECK(m.predicates.size() == 6);
  // serialization: a discrete space omits opens, Sierpinski keeps them
  json x = space_to_json(*m.find_space("X"));
  CHECK_FALSE(x.contains("opens"));
  json s = space_to_json(*m.find_space("S"));
  REQUIRE(s.contains("opens"));
  CHECK(s["opens"].size() == 3);
  // and loading the serialized space reproduces it
  json doc = {{"spaces", {s}}};
  Model back = model_from_json(doc);
  CHECK(back.spaces[0]->structurally_equal(*m.find_space("S")));
}

TEST_CASE("power point serialization") {
  CHECK(power_point_to_json(3, 8) == json{{"mask", 3}});
  CHECK(power_point_to_json(8, 8) == json{{"infinity", true}});
}
