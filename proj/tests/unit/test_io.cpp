#include <doctest.h>

#include <sstream>

#include "biclique/errors.hpp"
#include "biclique/io.hpp"

using namespace biclique;
using io::json;

TEST_SUITE("io") {

TEST_CASE("integers") {
  CHECK(io::parse_integer("  -42 ") == -42);
  CHECK(io::parse_integer("+7") == 7);
  CHECK(io::parse_integer("123456789012345678901234567890").get_str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(io::parse_integer(""), InvalidInput);
  CHECK_THROWS_AS(io::parse_integer("-"), InvalidInput);
  CHECK_THROWS_AS(io::parse_integer("1.5"), InvalidInput);
  CHECK_THROWS_AS(io::parse_integer("0x10"), InvalidInput);

  CHECK(io::integer_to_json(5) == json(5));
  const Integer huge("99999999999999999999999", 10);
  CHECK(io::integer_to_json(huge) == json("99999999999999999999999"));
  CHECK(io::integer_from_json(io::integer_to_json(huge)) == huge);
  CHECK(io::integer_from_json(json(-3)) == -3);
  CHECK_THROWS_AS(io::integer_from_json(json(1.5)), InvalidInput);
}

TEST_CASE("polynomials are decimal strings, constant term first") {
  const IntPoly p{-13, 14, -6, 1};
  CHECK(io::poly_to_json(p) == json::parse(R"(["-13","14","-6","1"])"));
  CHECK(io::poly_from_json(io::poly_to_json(p)) == p);
  CHECK(io::poly_from_json(json::parse("[1, \"2\", 0]")) == IntPoly{1, 2});
  CHECK(io::poly_to_json(IntPoly()) == json::array());
  CHECK_THROWS_AS(io::poly_from_json(json::object()), InvalidInput);
}

TEST_CASE("spec round trip") {
  const BicliqueSpec s(2, 4, {{0, 3}, {1, 0}, {1, 1}});
  CHECK(io::spec_from_json(io::spec_to_json(s)) == s);
  CHECK(io::spec_from_json(json::parse(R"({"j":1,"k":2})")) == BicliqueSpec(1, 2, {}));
  CHECK(io::spec_from_json(json::parse(R"({"params":[1,1,1,0,0,0]})")) ==
        from_params(ThreeCliqueParams(1, 1, 1, 0, 0, 0)));
}

TEST_CASE("malformed specs") {
  CHECK_THROWS_AS(io::spec_from_json(json::array()), InvalidInput);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"j":2})")), InvalidInput);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"j":2,"k":2,"complement_edges":[[0]]})")), InvalidInput);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"j":"2","k":2})")), InvalidInput);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"j":2,"k":2,"complement_edges":[[0,9]]})")), InvalidInput);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"params":[1,1,1]})")), InvalidInput);
  CHECK_THROWS_AS(io::spec_from_json(json::parse(R"({"params":[0,0,0,0,0,0]})")), DegenerateParameters);
}

TEST_CASE("edge lists") {
  std::istringstream ok("# comment\n\n3 3\n0 0\n 1 1 \n2 2\n");
  CHECK(io::spec_from_edge_list(ok) == BicliqueSpec(3, 3, {{0, 0}, {1, 1}, {2, 2}}));
  std::istringstream header_only("2 5\n");
  CHECK(io::spec_from_edge_list(header_only) == BicliqueSpec(2, 5, {}));
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(io::spec_from_edge_list(empty), InvalidInput);
  std::istringstream three("3 3\n0 0 1\n");
  CHECK_THROWS_AS(io::spec_from_edge_list(three), InvalidInput);
  std::istringstream words("3 3\na b\n");
  CHECK_THROWS_AS(io::spec_from_edge_list(words), InvalidInput);
}

TEST_CASE("parameter lists") {
  CHECK(io::parse_params("13,8,1,3,5,2") == ThreeCliqueParams(13, 8, 1, 3, 5, 2));
  CHECK(io::parse_params(" 1, 1,1 ,0,0,0") == ThreeCliqueParams(1, 1, 1, 0, 0, 0));
  CHECK_THROWS_AS(io::parse_params("1,2,3"), InvalidInput);
  CHECK_THROWS_AS(io::parse_params("1,2,,3,4,5"), InvalidInput);
  CHECK(io::parse_integer_list("0,-1,2") == std::vector<Integer>{0, -1, 2});
  CHECK(io::params_to_json(ThreeCliqueParams(1, 2, 3, 4, 5, 6)) == json::parse("[1,2,3,4,5,6]"));
}

TEST_CASE("relation and alpha+n documents") {
  RelationReport rep;
  rep.kind = RelationKind::kReflection;
  rep.shift = 5;
  rep.verified = true;
  CHECK(io::relation_to_json(rep).dump() == R"({"kind":"reflection","shift":5,"verified":true})");
  CHECK(io::relation_to_json(RelationReport{}).dump() == R"({"kind":"none","shift":null,"verified":false})");

  const json doc = io::alphan_to_json(alpha_plus_n(IntPoly::monomial(3)));
  CHECK(doc.at("params") == json::parse("[13,8,1,3,5,2]"));
  CHECK(doc.at("n") == 15);
  CHECK(doc.at("N") == 15);
  CHECK(doc.at("verified") == true);
  CHECK(doc.at("g") == json::parse(R"(["-3375","675","-45","1"])"));
}

}  // TEST_SUITE
