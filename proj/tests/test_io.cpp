#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/io.hpp"

using namespace hodge;

namespace {
const std::string kFixtures = FIXTURE_DIR;
}

TEST_CASE("parse example 1 fixture") {
  InputData in = parse_input(kFixtures + "/example1.poly");
  REQUIRE(in.vertices.size() == 6);
  CHECK(in.vertices[0] == IntVec({0, 0, 0, 0, 1}));
  CHECK(in.vertices[1] == IntVec({-3, -3, -2, -2, -1}));
  REQUIRE(in.parts);
  CHECK(*in.parts ==
        std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
}

TEST_CASE("matrix-only file parses without a partition") {
  InputData in = parse_input(kFixtures + "/quintic.poly");
  CHECK(in.vertices.size() == 5);
  CHECK(!in.parts);
}

TEST_CASE("parse errors carry location information") {
  CHECK_THROWS_AS(parse_input_text("", "t"), ParseError);
  CHECK_THROWS_AS(parse_input_text("2 2\n1 0\n", "t"), ParseError);
  CHECK_THROWS_AS(parse_input_text("2 2\n1 0 0\n0 1\n", "t"), ParseError);
  CHECK_THROWS_AS(parse_input_text("x y\n", "t"), ParseError);
  CHECK_THROWS_AS(parse_input_text("2 2\n1 0\n0 1\nnef 2 : 1 ; 3\n", "t"),
                  IndexOutOfRange);
  CHECK_THROWS_AS(parse_input_text("2 2\n1 0\n0 1\nnef 3 : 1 ; 2\n", "t"),
                  ParseError);
  try {
    parse_input_text("2 2\n1 0\n0 q\n", "t");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("t:3") != std::string::npos);
  }
}

TEST_CASE("partition line accepts compact semicolons and comments") {
  InputData in = parse_input_text(
      "# comment\n2 4 # trailing\n1 -1 0 0\n0 0 1 -1\nnef 2 : 1 2; 3 4\n",
      "t");
  REQUIRE(in.parts);
  CHECK(*in.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("run_ci produces the golden text lines for example 1") {
  InputData in = parse_input(kFixtures + "/example1.poly");
  RunOptions opts;
  RunReport rep = run_ci(in, opts);
  std::string text = render_text(rep);
  CHECK(text.find("h11 = 8 - 7 - 0 + 0 + 0 - 0 - 0 + 0 = 1\n") !=
        std::string::npos);
  CHECK(text.find("h21 = 98 - 7 - 30 + 0 + 0 - 0 - 0 + 0 = 61\n") !=
        std::string::npos);
  CHECK(rep.mode_used == "indecomposable");
}

TEST_CASE("ci requires a partition line") {
  InputData in = parse_input(kFixtures + "/quintic.poly");
  RunOptions opts;
  CHECK_THROWS_AS(run_ci(in, opts), ValidationError);
}

TEST_CASE("JSON rendering has the stable schema and re-verified totals") {
  InputData in = parse_input(kFixtures + "/example1.poly");
  RunOptions opts;
  RunReport rep = run_ci(in, opts);
  std::string js = render_json(rep, false);
  for (const char* key :
       {"\"n\"", "\"r\"", "\"h11\"", "\"h21\"", "\"diamond\"", "\"e_coeffs\"",
        "\"h11_terms\"", "\"h21_terms\"", "\"checks\"", "\"cross_check\"",
        "\"relations\""})
    CHECK(js.find(key) != std::string::npos);
  CHECK(js.find("\"timings\"") == std::string::npos);
  // totals equal the sum of the term values
  Int sum = 0;
  for (const auto& t : rep.h11_terms.terms) sum += t.value;
  CHECK(sum == rep.h11);
}

TEST_CASE("run_hyper on the quintic") {
  InputData in = parse_input(kFixtures + "/quintic.poly");
  RunOptions opts;
  RunReport rep = run_hyper(in, opts);
  CHECK(rep.h11 == 1);
  CHECK(rep.h21 == 101);
  std::string text = render_text(rep);
  CHECK(text.find("h11 = 6 - 5 - 0 + 0 = 1\n") != std::string::npos);
}
