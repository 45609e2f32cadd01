#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace steinberg;

TEST_CASE("weights") {
  CHECK(to_json(Weight{1, -2, 3}).dump() == "[1,-2,3]");
  CHECK(parse_weight("1,-2,3") == Weight{1, -2, 3});
  CHECK(parse_weight(" [1, -2, 3] ") == Weight{1, -2, 3});
  CHECK(parse_weight("7") == Weight{7});
  CHECK(parse_weight("+4, 5") == Weight{4, 5});
  CHECK_THROWS_AS((void)parse_weight(""), ParseError);
  CHECK_THROWS_AS((void)parse_weight("1,,2"), ParseError);
  CHECK_THROWS_AS((void)parse_weight("1,a"), ParseError);
  CHECK_THROWS_AS((void)parse_weight("[1.5]"), ParseError);
  CHECK_THROWS_AS((void)parse_weight("1,2,3,4,5,6,7"), ParseError);
  CHECK_THROWS_AS((void)parse_weight("1,2", 3), ParseError);
  CHECK_THROWS_AS((void)parse_weight("[1,2"), ParseError);
}

TEST_CASE("root systems") {
  const RootSystem g2 = build_root_system(Series::G, 2);
  CHECK(to_json(g2).dump() == R"({"rank":2,"series":"G"})");
  CHECK(root_system_from_json(parse_json(R"({"series":"B","rank":3})")).name() == "B3");
  CHECK_THROWS_AS((void)root_system_from_json(parse_json(R"({"series":"B"})")), ParseError);
  CHECK_THROWS_AS((void)root_system_from_json(parse_json(R"({"series":"B","rank":1})")), ConfigError);
}

TEST_CASE("characters: canonical output") {
  const Group a1(Series::A, 1);
  CHECK(to_json(weyl_character(a1, Weight{2})).dump() ==
        R"({"weights":[{"mult":1,"w":[-2]},{"mult":1,"w":[0]},{"mult":1,"w":[2]}]})");
  CHECK(to_json(Character{}).dump() == R"({"weights":[]})");
  // Repeated weights are summed, zero totals dropped.
  const Character c = character_from_json(
      parse_json(R"({"weights":[{"w":[1],"mult":2},{"w":[1],"mult":-2},{"w":[0],"mult":3}]})"));
  CHECK(c == Character{{Weight{0}, 3}});
  CHECK_THROWS_AS((void)character_from_json(parse_json(R"({"weights":[{"w":[1]}]})")), ParseError);
  CHECK_THROWS_AS((void)character_from_json(parse_json(R"({"weights":[{"w":[1],"mult":1},{"w":[1,2],"mult":1}]})")),
                  ParseError);
}

TEST_CASE("classes") {
  const KElement c{{Weight{2}, 1}, {Weight{0}, -1}};
  CHECK(to_json(c).dump() == R"({"basis":"delta","terms":[{"coeff":-1,"w":[0]},{"coeff":1,"w":[2]}]})");
  CHECK(class_from_json(parse_json(R"({"terms":[{"w":[1],"coeff":1}]})")) == KElement{{Weight{1}, 1}});
  CHECK_THROWS_AS((void)class_from_json(parse_json(R"({"basis":"simple","terms":[]})")), ParseError);
  CHECK_THROWS_AS((void)class_from_json(parse_json(R"({"terms":[{"w":[1],"coeff":"x"}]})")), ParseError);
}

TEST_CASE("property: serialization preserves equality of characters and classes") {
  std::mt19937_64 rng(53);
  const Group b2(Series::B, 2);
  for (int t = 0; t < 30; ++t) {
    const Character chi = tensor(weyl_character(b2, oracle::random_dominant(rng, 2, 3)),
                                 weyl_character(b2, oracle::random_dominant(rng, 2, 2))) -
                          weyl_character(b2, oracle::random_dominant(rng, 2, 4));
    const json j = to_json(chi);
    CHECK(character_from_json(parse_json(j.dump()), 2) == chi);
    CHECK(to_json(character_from_json(j)).dump() == j.dump());
    const KElement k = char_to_class(b2, chi);
    CHECK(class_from_json(parse_json(to_json(k).dump())) == k);
  }
}
