#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <stdexcept>

#include "hurwitz/table.hpp"

using namespace hurwitz;

namespace {

const Table kSample{{"j", "mu", "sigma"},
                    {{"2", "2,1", "17/36"}, {"3", "3", "1"}}};

}  // namespace

TEST_CASE("csv quotes only fields that need it") {
  CHECK(to_csv(kSample) == "j,mu,sigma\n2,\"2,1\",17/36\n3,3,1\n");
  const Table tricky{{"a"}, {{"say \"hi\""}, {"line\nbreak"}, {"plain"}}};
  CHECK(to_csv(tricky) ==
        "a\n\"say \"\"hi\"\"\"\n\"line\nbreak\"\nplain\n");
}

TEST_CASE("csv round-trips itself") {
  CHECK(parse_csv(to_csv(kSample)) == kSample);
  const Table tricky{{"x", "y"},
                     {{"a,b", "c\"d"}, {"", "multi\nline"}, {"q", ""}}};
  CHECK(parse_csv(to_csv(tricky)) == tricky);
}

TEST_CASE("csv parser accepts a missing final newline") {
  const Table t = parse_csv("a,b\n1,2");
  CHECK(t.rows == std::vector<std::vector<std::string>>{{"1", "2"}});
}

TEST_CASE("csv parser rejects malformed documents") {
  CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("a,b\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("a\n\"unterminated"), std::invalid_argument);
}

TEST_CASE("json emission is an array of string-valued objects") {
  const auto doc = nlohmann::json::parse(to_json(kSample));
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["j"] == "2");
  CHECK(doc[0]["mu"] == "2,1");
  CHECK(doc[0]["sigma"] == "17/36");
  CHECK(doc[1]["mu"] == "3");
  // key order follows column order
  const auto rendered = to_json(kSample);
  CHECK(rendered.find("\"j\"") < rendered.find("\"mu\""));
  CHECK(rendered.find("\"mu\"") < rendered.find("\"sigma\""));
}

TEST_CASE("tex emission escapes specials and keeps the row structure") {
  const Table t{{"head_a", "b"}, {{"50%", "x&y"}}};
  CHECK(to_tex(t) ==
        "head\\_a & b \\\\\n\\hline\n50\\% & x\\&y \\\\\n");
}
