#include "lspath/serialize.hpp"

#include <doctest.h>

using namespace lsp;

TEST_CASE("path JSON round trip") {
  auto rs = RootSystem::build("B2");
  for (const auto& p : generate_LS(rs, Covector::from_ints({1, 1}))) {
    Json j = to_json(p);
    CHECK(path_from_json(Json::parse(j.dump())) == p);
  }
  PLPath p = PLPath::from_directions(Covector::from_ints({0}), {Covector::from_ints({-2}), Covector::from_ints({2})},
                                     {Rational(1, 3), Rational(2, 3)});
  CHECK(to_json(p).dump() ==
        R"({"base":["0"],"segments":[{"direction":["-2"],"duration":"1/3"},{"direction":["2"],"duration":"2/3"}]})");
}

TEST_CASE("gallery JSON and ledger") {
  auto rs = RootSystem::build("A1");
  auto m = minimal_gallery(rs, Covector::from_ints({2}));
  auto g = gallery_from_choices(rs, m, WeylElement::longest(rs), {true});
  Json j = to_json(rs, g);
  CHECK(j["fold_steps"] == Json::array({1}));
  CHECK(j["target"] == Json::array({"0"}));
  CHECK(dimension_ledger_csv(rs, g) == "root,level,step,case\r\n1,-1,1,2\r\n");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("plain") == "plain");
}
