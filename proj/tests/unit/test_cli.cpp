#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = biclique::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BICLIQUE_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("factor from parameters") {
  const Outcome r = run({"factor", "--params", "1,1,1,0,0,0"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("factor") == json::parse(R"(["-13","14","-6","1"])"));
  CHECK(doc.at("clique") == 3);
}

TEST_CASE("alphan on x^3") {
  const Outcome r = run({"alphan", "--cubic", "0,0,0"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("params") == json::parse("[13,8,1,3,5,2]"));
  CHECK(doc.at("n") == 15);
  CHECK(doc.at("N") == 15);
  CHECK(doc.at("verified") == true);
}

TEST_CASE("alphan accepts an unreduced x^2 coefficient") {
  const Outcome r = run({"alphan", "--cubic", "5,1,1"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("n0") == 2);
  CHECK(doc.at("q") == json::parse(R"(["1","1","5","1"])"));
}

TEST_CASE("reflect on the complementary pair") {
  const Outcome r = run({"reflect", "params:1,1,1,0,0,0", "params:0,0,0,1,1,1"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"({"kind":"reflection","shift":5,"verified":true})"));
  const Outcome files = run({"reflect", data("six_cycle.json"), data("perfect_matching.txt")});
  CHECK(files.out == r.out);
  const Outcome polys = run({"reflect", "poly:9,-6,1", "poly:25,-10,1"});
  CHECK(json::parse(polys.out) == json::parse(R"({"kind":"translation","shift":2,"verified":true})"));
}

TEST_CASE("chrom, match and partner from files") {
  const Outcome chrom = run({"chrom", data("six_cycle.json")});
  CHECK(chrom.code == 0);
  CHECK(json::parse(chrom.out).at("poly") ==
        json::parse(R"(["0","-26","67","-67","34","-9","1"])"));
  const Outcome match = run({"match", data("perfect_matching.txt")});
  CHECK(json::parse(match.out).at("matching_numbers") == json::parse("[1,3,3,1]"));
  const Outcome params = run({"match", data("params.json")});
  CHECK(json::parse(params.out).at("matching_numbers") == json::parse("[1,6,9,2]"));
  const Outcome partner = run({"partner", data("perfect_matching.txt")});
  const json doc = json::parse(partner.out);
  CHECK(doc.at("shift") == 5);
  CHECK(doc.at("expected_shift") == 5);
  CHECK(doc.at("verified") == true);
}

TEST_CASE("family") {
  const Outcome r = run({"family", "--prop", "5", "--r", "1", "--s", "1", "--t", "1", "--u", "2"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("g") == json::parse("[1,1,1,1,1,2]"));
  CHECK(doc.at("h") == json::parse("[1,1,1,1,1,3]"));
  CHECK(doc.at("c") == 10);
  CHECK(doc.at("verified") == true);
  const Outcome infeasible = run({"family", "--prop", "5", "--r", "4", "--s", "4", "--t", "1", "--u", "0"});
  CHECK(infeasible.code == 2);
  CHECK_FALSE(infeasible.err.empty());
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"alphan", "--cubic", "-1,7,-3"}, {"factor", "--params", "2,0,1,0,3,1"}, {"atlas", "--j", "2", "--kmax", "3"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("atlas emits csv") {
  const Outcome r = run({"atlas", "--j", "1", "--kmax", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("j,k,canonical_id,factor,class_id,relation,shift\n", 0) == 0);
}

TEST_CASE("verify quick budget passes") {
  const Outcome r = run({"verify", "--budget", "quick"});
  CHECK(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("passed") == true);
  CHECK(doc.at("checks").size() == 10);
}

TEST_CASE("malformed input exits with 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"nonsense"},
           {"factor"},
           {"factor", "--params", "1,2,3"},
           {"factor", "--params", "0,0,0,0,0,0"},
           {"factor", "--params", "1,1,1,0,0,0", data("six_cycle.json")},
           {"match", data("bad_header.txt")},
           {"match", data("missing.json")},
           {"alphan", "--cubic", "x,1,2"},
           {"alphan", "--cubic", "1,2"},
           {"reflect", "poly:1,2,1", "poly:1,1"},
           {"family", "--prop", "4", "--r", "1", "--s", "1", "--t", "1", "--u", "1"},
           {"verify", "--budget", "huge"},
           {"atlas", "--j", "0", "--kmax", "3"}}) {
    const Outcome r = run(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}
