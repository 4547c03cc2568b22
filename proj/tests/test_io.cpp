#include <doctest.h>

#include "constructions.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "test_helpers.hpp"

using namespace cg;
using namespace cg::testing;

TEST_CASE("map serialization is bit-exact under round trip") {
  std::string b_json = R"({"knots":[["0","0"],["1","2"]],"left_slope":"1","right_slope":"1"})";
  PLMap b = plmap_from_json(b_json);
  CHECK(b == doubling_map());
  CHECK(plmap_to_json(b) == b_json);
  CHECK(plmap_to_json(plmap_from_json(plmap_to_json(b))) == plmap_to_json(b));

  // parsing normalizes: collinear knots and non-reduced fractions disappear
  PLMap messy = plmap_from_json(
      R"({"knots":[["0","0"],["2/4","1"],["1","2"]],"left_slope":"3/3","right_slope":"1"})");
  CHECK(messy == b);
  CHECK(plmap_to_json(messy) == b_json);

  CHECK_THROWS_AS(plmap_from_json("{"), Error);
  CHECK_THROWS_AS(plmap_from_json(R"({"knots":[]})"), Error);
  CHECK_THROWS_AS(plmap_from_json(R"({"knots":[["0","0"],["1","0"]],"left_slope":"1","right_slope":"1"})"),
                  Error);
}

TEST_CASE("serialization round-trips random maps bit-exactly") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    PLMap f = rng.plmap();
    std::string text = plmap_to_json(f);
    PLMap parsed = plmap_from_json(text);
    CHECK(parsed == f);
    CHECK(plmap_to_json(parsed) == text);
  }
}

TEST_CASE("system serialization") {
  auto chain = standard_three_chain();
  std::string text = system_to_json(chain);
  std::vector<PLMap> parsed = system_from_json(text);
  REQUIRE(parsed.size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(parsed[i] == chain[i]);
  CHECK(system_to_json(parsed) == text);
  CHECK_THROWS_AS(system_from_json("[]"), Error);
}

TEST_CASE("word serialization") {
  Word w({{0, 2}, {1, -1}});
  CHECK(word_to_json(w) == R"([["0","2"],["1","-1"]])");
  CHECK(word_from_json(word_to_json(w)) == w);
  CHECK(word_from_json("[]").is_empty());
  CHECK_THROWS_AS(word_from_json(R"([["x","1"]])"), Error);
}

TEST_CASE("reports are stable across runs") {
  ChainSystem sys = classify_prechain(standard_three_chain());
  SystemCertificates certs = certify(sys);
  std::string r1 = verify_report(sys, certs);
  ChainSystem sys2 = classify_prechain(standard_three_chain());
  SystemCertificates certs2 = certify(sys2);
  CHECK(r1 == verify_report(sys2, certs2));
  CHECK(r1.find("\"status\":\"chain-certified\"") != std::string::npos);
  CHECK(r1.find("\"holds\":false") != std::string::npos);  // fn certificate
}

TEST_CASE("orbit csv has exact and decimal columns") {
  OrbitSample s = orbit(standard_three_chain(), rat(1), 100);
  std::string csv = orbit_csv(s);
  CHECK(csv.rfind("exact,approx\n", 0) == 0);
  size_t rows = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
  CHECK(rows == 100);
  CHECK(csv.find("\n0,0\n") != std::string::npos);
  CHECK(csv.find("1/2,0.5\n") != std::string::npos);
  CHECK(csv.find("3/2,1.5\n") != std::string::npos);
  CHECK(csv.find("\n2,2\n") != std::string::npos);
}

TEST_CASE("interval parsing helpers") {
  auto closed = closed_intervals_from_json(R"([["0","3/2"],["2","3"]])");
  REQUIRE(closed.size() == 2);
  CHECK(closed[0].lo == rat(0));
  CHECK(closed[0].hi == rat(3, 2));
  OpenInterval open = open_interval_from_json(R"(["1/2","3/2"])");
  CHECK(open.lo == rat(1, 2));
  CHECK_THROWS_AS(open_interval_from_json("[\"1\"]"), Error);
}

TEST_CASE("svg plots are deterministic and reject empty systems") {
  std::string sys_json = system_to_json(standard_three_chain());
  std::string svg = plot_svg(sys_json, false);
  CHECK(svg == plot_svg(sys_json, false));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  // three support rows
  CHECK(svg.find(">f0<") != std::string::npos);
  CHECK(svg.find(">f2<") != std::string::npos);

  std::string with_graphs = plot_svg(sys_json, true);
  CHECK(with_graphs.size() > svg.size());

  std::string map_svg = plot_svg(plmap_to_json(doubling_map()), false);
  CHECK(map_svg.find("circle") != std::string::npos);

  CHECK_THROWS_AS(plot_svg(R"({"generators":[]})", false), Error);
  CHECK_THROWS_AS(plot_svg("3", false), Error);
}
